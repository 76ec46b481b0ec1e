#pragma once

#include <string>
#include <string_view>

namespace kbtext {

enum class TermKind { Iri, Literal, BlankNode };

// One RDF term. Literals carry at most one of datatype_iri / language_tag;
// both empty means a plain literal.
struct Term {
  TermKind kind = TermKind::Iri;
  std::string value;         // IRI text, literal lexical form, or blank label
  std::string datatype_iri;  // literals only
  std::string language_tag;  // literals only, lowercase

  static Term iri(std::string v);
  static Term literal(std::string lexical, std::string datatype = "",
                      std::string lang = "");
  static Term blank(std::string label);

  bool is_iri() const { return kind == TermKind::Iri; }
  bool is_literal() const { return kind == TermKind::Literal; }
  bool is_blank() const { return kind == TermKind::BlankNode; }

  // Canonical N-Triples form, also used as the term's identity key.
  std::string ntriples() const;

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }
};

struct Triple {
  Term subject;    // IRI or blank node
  Term predicate;  // IRI
  Term object;     // any term

  // Canonical one-line N-Triples form: "<s> <p> <o> ."
  std::string ntriples() const;

  bool operator==(const Triple& other) const;
  bool operator!=(const Triple& other) const { return !(*this == other); }
};

// Escapes the inside of a double-quoted N-Triples literal.
std::string escape_literal(std::string_view s);

// Expands well-known prefixes (rdf:, rdfs:, xsd:, foaf:, dbo:, dbr:, dbp:,
// schema:) in user-facing inputs like CLI flags and lexicon files. Full
// IRIs pass through untouched.
std::string expand_curie(std::string_view text);

// Well-known vocabulary.
namespace vocab {
inline constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfsLabel =
    "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view kXsdDate =
    "http://www.w3.org/2001/XMLSchema#date";
inline constexpr std::string_view kXsdInteger =
    "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kXsdDecimal =
    "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view kXsdString =
    "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kFoafGender =
    "http://xmlns.com/foaf/0.1/gender";
}  // namespace vocab

}  // namespace kbtext
