#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kbtext/term.hpp"

namespace kbtext {

struct ParseOptions {
  // When set, malformed statements are skipped and recorded as warnings
  // instead of aborting the parse.
  bool lenient = false;
};

struct ParseReport {
  std::vector<std::string> warnings;
};

struct Label {
  std::string text;
  std::string language;  // empty for plain literals
};

// Immutable, indexed triple store. Construction deduplicates statements;
// iteration order is first-seen input order throughout, which keeps every
// downstream sampling step reproducible for identical input bytes.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  explicit KnowledgeBase(std::vector<Triple> triples);

  const std::vector<Triple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }

  std::vector<Triple> with_subject(const Term& s) const;
  std::vector<Triple> with_object(const Term& o) const;

  // rdfs:label literals attached to an IRI, in input order. Null if none.
  const std::vector<Label>* labels(std::string_view iri) const;

  // Human-readable name: exact-language label, then any label, then the
  // IRI local name with underscores spaced and camelCase split apart.
  std::string label_of(const Term& r, std::string_view lang = "en") const;

  // IRI subjects typed with any of the given classes, deduplicated and
  // sorted lexicographically by IRI.
  std::vector<Term> instances_of(const std::vector<std::string>& class_iris) const;

  // Class IRIs this resource is typed with, in input order.
  std::vector<std::string> types_of(std::string_view iri) const;

  bool has_type(std::string_view iri, std::string_view class_iri) const;

  // Canonical N-Triples, one statement per line, stored order.
  void serialize(std::ostream& out) const;

 private:
  std::vector<Triple> triples_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_subject_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_object_;
  std::unordered_map<std::string, std::vector<std::string>> instances_by_class_;
  std::unordered_map<std::string, std::vector<Label>> label_index_;
  std::unordered_map<std::string, std::vector<std::string>> types_by_subject_;
};

// Parses N-Triples text. Throws SyntaxError with 1-based line/column unless
// options.lenient is set, in which case bad statements become warnings.
KnowledgeBase parse_ntriples(std::istream& in, const ParseOptions& options = {},
                             ParseReport* report = nullptr);
KnowledgeBase parse_ntriples(std::string_view text,
                             const ParseOptions& options = {},
                             ParseReport* report = nullptr);

// Reads a KB from disk; names ending in .gz are inflated first.
KnowledgeBase load_kb(const std::string& path, const ParseOptions& options = {},
                      ParseReport* report = nullptr);

// Fallback naming for IRIs without labels: "birthPlace" -> "birth place".
std::string local_name_words(std::string_view iri);

}  // namespace kbtext
