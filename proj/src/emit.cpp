#include "kbtext/emit.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "kbtext/errors.hpp"
#include "kbtext/text.hpp"

namespace kbtext {

namespace {

constexpr std::string_view kNif =
    "http://persistence.uni-leipzig.de/nlp2rdf/ontologies/nif-core#";
constexpr std::string_view kItsTaIdentRef =
    "http://www.w3.org/2005/11/its/rdf#taIdentRef";
constexpr std::string_view kXsdNonNegativeInteger =
    "http://www.w3.org/2001/XMLSchema#nonNegativeInteger";

std::string nif(std::string_view local) {
  return std::string(kNif) + std::string(local);
}

Term count_literal(std::size_t n) {
  return Term::literal(std::to_string(n), std::string(kXsdNonNegativeInteger));
}

void emit_triple(std::string& out, Term s, Term p, Term o) {
  out += Triple{std::move(s), std::move(p), std::move(o)}.ntriples();
  out += '\n';
}

std::string fragment_iri(const std::string& doc_id, std::size_t begin,
                         std::size_t end) {
  return std::string(kCorpusIriBase) + doc_id + "#char=" +
         std::to_string(begin) + "," + std::to_string(end);
}

// ".../corpus/0042#char=0,117" -> "0042"
std::string doc_id_from_iri(const std::string& iri) {
  std::size_t hash = iri.rfind('#');
  std::string path = hash == std::string::npos ? iri : iri.substr(0, hash);
  std::size_t slash = path.rfind('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

std::size_t parse_offset(const Term& literal, const std::string& subject) {
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(literal.value, &pos);
    if (pos == literal.value.size()) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw Error("bad offset literal '" + literal.value + "' on <" + subject + ">");
}

bool ascii_alnum_cp(std::string_view text, std::size_t cp) {
  std::string c = cp_substr(text, cp, cp + 1);
  return c.size() == 1 && ascii_alnum_byte(c[0]);
}

}  // namespace

std::string emit_nif(const Corpus& corpus) {
  std::string out;
  out += "# kbtext " + corpus.generator_version + "\n";
  out += "# documents: " + std::to_string(corpus.documents.size()) + "\n";
  const Term type = Term::iri(std::string(vocab::kRdfType));
  const Term context_class = Term::iri(nif("Context"));
  const Term phrase_class = Term::iri(nif("Phrase"));
  const Term is_string = Term::iri(nif("isString"));
  const Term begin_index = Term::iri(nif("beginIndex"));
  const Term end_index = Term::iri(nif("endIndex"));
  const Term reference_context = Term::iri(nif("referenceContext"));
  const Term anchor_of = Term::iri(nif("anchorOf"));
  const Term ta_ident_ref = Term::iri(std::string(kItsTaIdentRef));

  for (const Document& doc : corpus.documents) {
    const std::size_t len = cp_length(doc.text);
    const Term ctx = Term::iri(fragment_iri(doc.id, 0, len));
    emit_triple(out, ctx, type, context_class);
    emit_triple(out, ctx, is_string, Term::literal(doc.text));
    emit_triple(out, ctx, begin_index, count_literal(0));
    emit_triple(out, ctx, end_index, count_literal(len));
    for (const SpanAnnotation& a : doc.annotations) {
      const Term phrase = Term::iri(fragment_iri(doc.id, a.begin, a.end));
      emit_triple(out, phrase, type, phrase_class);
      emit_triple(out, phrase, reference_context, ctx);
      emit_triple(out, phrase, anchor_of, Term::literal(a.anchor));
      emit_triple(out, phrase, begin_index, count_literal(a.begin));
      emit_triple(out, phrase, end_index, count_literal(a.end));
      emit_triple(out, phrase, ta_ident_ref, Term::iri(a.resource_iri));
    }
  }
  return out;
}

std::string emit_jsonl(const Corpus& corpus) {
  std::string out;
  for (const Document& doc : corpus.documents) {
    nlohmann::ordered_json j;
    j["id"] = doc.id;
    j["text"] = doc.text;
    nlohmann::ordered_json annotations = nlohmann::ordered_json::array();
    for (const SpanAnnotation& a : doc.annotations) {
      annotations.push_back({a.begin, a.end, a.resource_iri});
    }
    j["annotations"] = std::move(annotations);
    out += j.dump();
    out += '\n';
  }
  return out;
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

std::vector<Document> parse_nif(std::string_view turtle) {
  KnowledgeBase kb = parse_ntriples(turtle);

  const std::string type{vocab::kRdfType};
  const std::string context_class = nif("Context");
  const std::string is_string = nif("isString");
  const std::string reference_context = nif("referenceContext");
  const std::string anchor_of = nif("anchorOf");
  const std::string begin_index = nif("beginIndex");
  const std::string end_index = nif("endIndex");
  const std::string ta_ident_ref{kItsTaIdentRef};

  struct PhraseNode {
    std::string context;
    std::string anchor;
    std::string resource;
    std::size_t begin = 0;
    std::size_t end = 0;
    bool has_begin = false, has_end = false, has_resource = false;
  };
  std::map<std::string, Document> contexts;     // context IRI -> document
  std::map<std::string, PhraseNode> phrases;    // phrase IRI -> fields

  for (const Triple& t : kb.triples()) {
    if (!t.subject.is_iri()) continue;
    const std::string& s = t.subject.value;
    const std::string& p = t.predicate.value;
    if (p == type && t.object.is_iri() && t.object.value == context_class) {
      contexts[s].id = doc_id_from_iri(s);
    } else if (p == is_string && t.object.is_literal()) {
      contexts[s].text = t.object.value;
    } else if (p == reference_context && t.object.is_iri()) {
      phrases[s].context = t.object.value;
    } else if (p == anchor_of && t.object.is_literal()) {
      phrases[s].anchor = t.object.value;
    } else if (p == begin_index && t.object.is_literal()) {
      phrases[s].begin = parse_offset(t.object, s);
      phrases[s].has_begin = true;
    } else if (p == end_index && t.object.is_literal()) {
      phrases[s].end = parse_offset(t.object, s);
      phrases[s].has_end = true;
    } else if (p == ta_ident_ref && t.object.is_iri()) {
      phrases[s].resource = t.object.value;
      phrases[s].has_resource = true;
    }
  }
  // Context nodes also carry begin/end indexes; drop the ones that never
  // pointed at a reference context.
  for (const auto& [iri, ph] : phrases) {
    if (ph.context.empty()) continue;
    if (!ph.has_begin || !ph.has_end || !ph.has_resource) {
      throw Error("incomplete phrase node <" + iri + ">");
    }
    auto ctx = contexts.find(ph.context);
    if (ctx == contexts.end()) {
      throw Error("phrase <" + iri + "> references unknown context <" +
                  ph.context + ">");
    }
    ctx->second.annotations.push_back(
        SpanAnnotation{ph.begin, ph.end, ph.resource, ph.anchor});
  }

  std::vector<Document> docs;
  docs.reserve(contexts.size());
  for (auto& [iri, doc] : contexts) {
    std::sort(doc.annotations.begin(), doc.annotations.end(),
              [](const SpanAnnotation& a, const SpanAnnotation& b) {
                return a.begin != b.begin ? a.begin < b.begin : a.end < b.end;
              });
    docs.push_back(std::move(doc));
  }
  std::sort(docs.begin(), docs.end(),
            [](const Document& a, const Document& b) { return a.id < b.id; });
  return docs;
}

std::vector<Document> parse_jsonl(std::string_view text) {
  std::vector<Document> docs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      Document doc;
      doc.id = j.at("id").get<std::string>();
      doc.text = j.at("text").get<std::string>();
      for (const auto& a : j.at("annotations")) {
        if (!a.is_array() || a.size() != 3) {
          throw std::runtime_error("annotation must be [begin, end, iri]");
        }
        doc.annotations.push_back(SpanAnnotation{
            a[0].get<std::size_t>(), a[1].get<std::size_t>(),
            a[2].get<std::string>(), ""});
      }
      docs.push_back(std::move(doc));
    } catch (const std::exception& e) {
      throw Error("jsonl line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return docs;
}

std::vector<ValidationIssue> validate_documents(
    const std::vector<Document>& docs) {
  std::vector<ValidationIssue> issues;
  for (const Document& doc : docs) {
    const std::size_t len = cp_length(doc.text);
    const auto& anns = doc.annotations;
    for (std::size_t i = 0; i < anns.size(); ++i) {
      const SpanAnnotation& a = anns[i];
      const std::string where =
          "span [" + std::to_string(a.begin) + "," + std::to_string(a.end) + ")";
      if (a.begin >= a.end) {
        issues.push_back({doc.id, where + " is empty or inverted"});
        continue;
      }
      if (a.end > len) {
        issues.push_back({doc.id, where + " exceeds text length " +
                                      std::to_string(len)});
        continue;
      }
      if (i > 0 && anns[i - 1].begin > a.begin) {
        issues.push_back({doc.id, where + " is out of order"});
      } else if (i > 0 && anns[i - 1].end > a.begin) {
        issues.push_back({doc.id, where + " overlaps the previous span"});
      }
      if (!a.anchor.empty()) {
        std::string covered = cp_substr(doc.text, a.begin, a.end);
        if (covered != a.anchor) {
          issues.push_back({doc.id, where + " anchor mismatch: expected \"" +
                                        a.anchor + "\", text has \"" + covered +
                                        "\""});
        }
      }
      if (a.begin > 0 && ascii_alnum_cp(doc.text, a.begin - 1) &&
          ascii_alnum_cp(doc.text, a.begin)) {
        issues.push_back({doc.id, where + " starts inside a word"});
      }
      if (a.end < len && ascii_alnum_cp(doc.text, a.end - 1) &&
          ascii_alnum_cp(doc.text, a.end)) {
        issues.push_back({doc.id, where + " ends inside a word"});
      }
    }
  }
  return issues;
}

}  // namespace kbtext
