#include "kbtext/term.hpp"

#include <cstdio>

namespace kbtext {

Term Term::iri(std::string v) {
  Term t;
  t.kind = TermKind::Iri;
  t.value = std::move(v);
  return t;
}

Term Term::literal(std::string lexical, std::string datatype,
                   std::string lang) {
  Term t;
  t.kind = TermKind::Literal;
  t.value = std::move(lexical);
  t.datatype_iri = std::move(datatype);
  t.language_tag = std::move(lang);
  return t;
}

Term Term::blank(std::string label) {
  Term t;
  t.kind = TermKind::BlankNode;
  t.value = std::move(label);
  return t;
}

std::string escape_literal(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", c);
          out += buf;
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  return out;
}

// IRIs are stored unescaped; angle-bracket output re-escapes the few byte
// values N-Triples forbids inside <>.
static std::string escape_iri(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    if (c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' ||
        c == '}' || c == '|' || c == '^' || c == '`' || c == '\\') {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04X", c);
      out += buf;
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

std::string Term::ntriples() const {
  switch (kind) {
    case TermKind::Iri:
      return "<" + escape_iri(value) + ">";
    case TermKind::BlankNode:
      return "_:" + value;
    case TermKind::Literal: {
      std::string out = "\"" + escape_literal(value) + "\"";
      if (!language_tag.empty()) {
        out += "@" + language_tag;
      } else if (!datatype_iri.empty()) {
        out += "^^<" + escape_iri(datatype_iri) + ">";
      }
      return out;
    }
  }
  return {};
}

bool Term::operator==(const Term& other) const {
  return kind == other.kind && value == other.value &&
         datatype_iri == other.datatype_iri &&
         language_tag == other.language_tag;
}

std::string Triple::ntriples() const {
  return subject.ntriples() + " " + predicate.ntriples() + " " +
         object.ntriples() + " .";
}

bool Triple::operator==(const Triple& other) const {
  return subject == other.subject && predicate == other.predicate &&
         object == other.object;
}

std::string expand_curie(std::string_view text) {
  if (text.find("://") != std::string_view::npos) return std::string(text);
  static const struct {
    std::string_view prefix;
    std::string_view base;
  } kPrefixes[] = {
      {"rdf:", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
      {"rdfs:", "http://www.w3.org/2000/01/rdf-schema#"},
      {"xsd:", "http://www.w3.org/2001/XMLSchema#"},
      {"foaf:", "http://xmlns.com/foaf/0.1/"},
      {"dbo:", "http://dbpedia.org/ontology/"},
      {"dbr:", "http://dbpedia.org/resource/"},
      {"dbp:", "http://dbpedia.org/property/"},
      {"schema:", "http://schema.org/"},
  };
  for (const auto& [prefix, base] : kPrefixes) {
    if (text.size() > prefix.size() &&
        text.compare(0, prefix.size(), prefix) == 0) {
      return std::string(base) + std::string(text.substr(prefix.size()));
    }
  }
  return std::string(text);
}

}  // namespace kbtext
