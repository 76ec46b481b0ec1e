#include "kbtext/kb.hpp"

#include <zlib.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "kbtext/errors.hpp"
#include "kbtext/text.hpp"

namespace kbtext {

namespace {

// Single-pass scanner over a full N-Triples document. The grammar is line
// oriented, so recovery in lenient mode just resynchronizes on '\n'.
class NtScanner {
 public:
  NtScanner(std::string_view text, const ParseOptions& options,
            ParseReport* report)
      : text_(text), options_(options), report_(report) {}

  std::vector<Triple> run() {
    std::vector<Triple> out;
    std::unordered_set<std::string> seen;
    while (!at_end()) {
      skip_blank();
      if (at_end()) break;
      try {
        Triple t = statement();
        if (seen.insert(t.ntriples()).second) out.push_back(std::move(t));
      } catch (const SyntaxError& e) {
        if (!options_.lenient) throw;
        if (report_) {
          report_->warnings.push_back(std::string("skipped statement: ") +
                                      e.what());
        }
        while (!at_end() && peek() != '\n') ++pos_;
      }
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  std::size_t column() const { return pos_ - line_start_ + 1; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(line_, column(), msg);
  }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) {
      advance();
    }
  }

  // Whitespace, empty lines and comment lines between statements.
  void skip_blank() {
    for (;;) {
      skip_ws();
      if (at_end()) return;
      if (peek() == '\n') {
        advance();
        continue;
      }
      if (peek() == '#') {
        while (!at_end() && peek() != '\n') advance();
        continue;
      }
      return;
    }
  }

  Triple statement() {
    Triple t;
    t.subject = subject_term();
    require_gap("after subject");
    t.predicate = iriref();
    require_gap("after predicate");
    t.object = object_term();
    skip_ws();
    if (at_end() || peek() != '.') fail("expected '.' terminating statement");
    advance();
    skip_ws();
    if (!at_end() && peek() == '#') {
      while (!at_end() && peek() != '\n') advance();
    }
    if (!at_end()) {
      if (peek() != '\n') fail("unexpected trailing characters after '.'");
      advance();
    }
    return t;
  }

  void require_gap(const char* where) {
    if (at_end() || (peek() != ' ' && peek() != '\t')) {
      fail(std::string("expected whitespace ") + where);
    }
    skip_ws();
  }

  Term subject_term() {
    if (at_end()) fail("expected subject");
    if (peek() == '<') return iriref();
    if (peek() == '_') return blank_node();
    fail("subject must be an IRI or blank node");
  }

  Term object_term() {
    if (at_end()) fail("expected object");
    if (peek() == '<') return iriref();
    if (peek() == '_') return blank_node();
    if (peek() == '"') return literal();
    fail("object must be an IRI, blank node or literal");
  }

  Term iriref() {
    if (at_end() || peek() != '<') fail("expected '<'");
    advance();
    std::string value;
    while (!at_end() && peek() != '>') {
      unsigned char c = static_cast<unsigned char>(peek());
      if (c == '\\') {
        advance();
        unescape_uchar(value);
        continue;
      }
      if (c <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' ||
          c == '|' || c == '^' || c == '`') {
        fail("character not allowed inside IRI");
      }
      value.push_back(static_cast<char>(c));
      advance();
    }
    if (at_end()) fail("unterminated IRI");
    advance();  // '>'
    if (value.find(':') == std::string::npos) {
      fail("IRI must be absolute (missing scheme separator ':')");
    }
    return Term::iri(std::move(value));
  }

  Term blank_node() {
    advance();  // '_'
    if (at_end() || peek() != ':') fail("expected ':' in blank node label");
    advance();
    std::string label;
    while (!at_end()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
        label.push_back(c);
        advance();
      } else {
        break;
      }
    }
    if (label.empty()) fail("empty blank node label");
    return Term::blank(std::move(label));
  }

  Term literal() {
    advance();  // '"'
    std::string value;
    for (;;) {
      if (at_end() || peek() == '\n') fail("unterminated literal");
      char c = peek();
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        advance();
        if (at_end()) fail("truncated escape sequence");
        char e = peek();
        switch (e) {
          case 't': value.push_back('\t'); advance(); break;
          case 'b': value.push_back('\b'); advance(); break;
          case 'n': value.push_back('\n'); advance(); break;
          case 'r': value.push_back('\r'); advance(); break;
          case 'f': value.push_back('\f'); advance(); break;
          case '"': value.push_back('"'); advance(); break;
          case '\'': value.push_back('\''); advance(); break;
          case '\\': value.push_back('\\'); advance(); break;
          case 'u':
          case 'U': unescape_uchar(value); break;
          default: fail("unknown escape sequence in literal");
        }
        continue;
      }
      value.push_back(c);
      advance();
    }
    // Optional language tag or datatype; never both.
    if (!at_end() && peek() == '@') {
      advance();
      std::string tag;
      while (!at_end() &&
             (std::isalnum(static_cast<unsigned char>(peek())) ||
              peek() == '-')) {
        tag.push_back(peek());
        advance();
      }
      if (tag.empty() || !std::isalpha(static_cast<unsigned char>(tag[0]))) {
        fail("malformed language tag");
      }
      return Term::literal(std::move(value), "", ascii_lower(tag));
    }
    if (!at_end() && peek() == '^') {
      advance();
      if (at_end() || peek() != '^') fail("expected '^^' before datatype IRI");
      advance();
      Term dt = iriref();
      return Term::literal(std::move(value), std::move(dt.value));
    }
    return Term::literal(std::move(value));
  }

  // Consumes "uXXXX" or "UXXXXXXXX" after the backslash was eaten.
  void unescape_uchar(std::string& out) {
    if (at_end() || (peek() != 'u' && peek() != 'U')) {
      fail("unsupported escape sequence");
    }
    int digits = (peek() == 'u') ? 4 : 8;
    advance();
    uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      if (at_end() || !std::isxdigit(static_cast<unsigned char>(peek()))) {
        fail("bad hex digit in \\u escape");
      }
      char c = peek();
      uint32_t digit = (c >= '0' && c <= '9')   ? static_cast<uint32_t>(c - '0')
                       : (c >= 'a' && c <= 'f') ? static_cast<uint32_t>(c - 'a' + 10)
                                                : static_cast<uint32_t>(c - 'A' + 10);
      cp = (cp << 4) | digit;
      advance();
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      fail("escape is not a Unicode scalar value");
    }
    append_utf8(out, cp);
  }

  std::string_view text_;
  const ParseOptions& options_;
  ParseReport* report_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

}  // namespace

KnowledgeBase::KnowledgeBase(std::vector<Triple> triples)
    : triples_(std::move(triples)) {
  for (std::size_t i = 0; i < triples_.size(); ++i) {
    const Triple& t = triples_[i];
    by_subject_[t.subject.ntriples()].push_back(i);
    by_object_[t.object.ntriples()].push_back(i);
    if (t.predicate.value == vocab::kRdfType && t.subject.is_iri() &&
        t.object.is_iri()) {
      instances_by_class_[t.object.value].push_back(t.subject.value);
      types_by_subject_[t.subject.value].push_back(t.object.value);
    }
    if (t.predicate.value == vocab::kRdfsLabel && t.subject.is_iri() &&
        t.object.is_literal()) {
      label_index_[t.subject.value].push_back(
          {t.object.value, t.object.language_tag});
    }
  }
}

std::vector<Triple> KnowledgeBase::with_subject(const Term& s) const {
  std::vector<Triple> out;
  auto it = by_subject_.find(s.ntriples());
  if (it == by_subject_.end()) return out;
  out.reserve(it->second.size());
  for (std::size_t i : it->second) out.push_back(triples_[i]);
  return out;
}

std::vector<Triple> KnowledgeBase::with_object(const Term& o) const {
  std::vector<Triple> out;
  auto it = by_object_.find(o.ntriples());
  if (it == by_object_.end()) return out;
  out.reserve(it->second.size());
  for (std::size_t i : it->second) out.push_back(triples_[i]);
  return out;
}

const std::vector<Label>* KnowledgeBase::labels(std::string_view iri) const {
  auto it = label_index_.find(std::string(iri));
  if (it == label_index_.end()) return nullptr;
  return &it->second;
}

std::string KnowledgeBase::label_of(const Term& r,
                                    std::string_view lang) const {
  if (r.is_blank()) return "_:" + r.value;
  if (const std::vector<Label>* ls = labels(r.value)) {
    std::string want = ascii_lower(lang);
    for (const Label& l : *ls) {
      if (l.language == want) return l.text;
    }
    if (!ls->empty()) return ls->front().text;
  }
  return local_name_words(r.value);
}

std::vector<Term> KnowledgeBase::instances_of(
    const std::vector<std::string>& class_iris) const {
  std::vector<std::string> found;
  for (const std::string& c : class_iris) {
    auto it = instances_by_class_.find(c);
    if (it == instances_by_class_.end()) continue;
    found.insert(found.end(), it->second.begin(), it->second.end());
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<Term> out;
  out.reserve(found.size());
  for (std::string& iri : found) out.push_back(Term::iri(std::move(iri)));
  return out;
}

std::vector<std::string> KnowledgeBase::types_of(std::string_view iri) const {
  auto it = types_by_subject_.find(std::string(iri));
  if (it == types_by_subject_.end()) return {};
  return it->second;
}

bool KnowledgeBase::has_type(std::string_view iri,
                             std::string_view class_iri) const {
  for (const std::string& t : types_of(iri)) {
    if (t == class_iri) return true;
  }
  return false;
}

void KnowledgeBase::serialize(std::ostream& out) const {
  for (const Triple& t : triples_) out << t.ntriples() << "\n";
}

KnowledgeBase parse_ntriples(std::string_view text, const ParseOptions& options,
                             ParseReport* report) {
  NtScanner scanner(text, options, report);
  return KnowledgeBase(scanner.run());
}

KnowledgeBase parse_ntriples(std::istream& in, const ParseOptions& options,
                             ParseReport* report) {
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  return parse_ntriples(std::string_view(text), options, report);
}

static std::string read_gzip(const std::string& path) {
  gzFile f = gzopen(path.c_str(), "rb");
  if (f == nullptr) throw IoError("cannot open " + path);
  std::string out;
  char buf[1 << 15];
  for (;;) {
    int n = gzread(f, buf, sizeof buf);
    if (n < 0) {
      gzclose(f);
      throw IoError("gzip read error in " + path);
    }
    if (n == 0) break;
    out.append(buf, static_cast<std::size_t>(n));
  }
  gzclose(f);
  return out;
}

KnowledgeBase load_kb(const std::string& path, const ParseOptions& options,
                      ParseReport* report) {
  std::string text;
  if (path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0) {
    text = read_gzip(path);
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return parse_ntriples(std::string_view(text), options, report);
}

std::string local_name_words(std::string_view iri) {
  std::size_t cut = iri.find_last_of("#/");
  if (cut == std::string_view::npos) cut = iri.find_last_of(':');
  std::string_view local =
      (cut == std::string_view::npos) ? iri : iri.substr(cut + 1);

  std::string out;
  out.reserve(local.size() + 4);
  for (std::size_t i = 0; i < local.size(); ++i) {
    char c = local[i];
    if (c == '_') {
      if (!out.empty() && out.back() != ' ') out.push_back(' ');
      continue;
    }
    bool boundary =
        i > 0 && std::isupper(static_cast<unsigned char>(c)) &&
        (std::islower(static_cast<unsigned char>(local[i - 1])) ||
         std::isdigit(static_cast<unsigned char>(local[i - 1])));
    if (boundary) {
      if (!out.empty() && out.back() != ' ') out.push_back(' ');
      out.push_back(static_cast<char>(
          std::tolower(static_cast<unsigned char>(c))));
    } else {
      out.push_back(c);
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  std::size_t start = out.find_first_not_of(' ');
  if (start == std::string::npos) return {};
  return out.substr(start);
}

}  // namespace kbtext
