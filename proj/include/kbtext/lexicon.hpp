#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kbtext/kb.hpp"

namespace kbtext {

enum class PredicateCategory { NounPhrase, Verb };

struct LexiconEntry {
  std::string predicate_iri;
  std::string realization;  // surface words, single-space separated
  PredicateCategory category = PredicateCategory::NounPhrase;
};

// Predicate surface forms. Explicit entries (from a TSV file or set_entry)
// shadow anything derived from labels or local names.
class Lexicon {
 public:
  Lexicon() = default;

  // TSV columns: predicate IRI <tab> realization <tab> NounPhrase|Verb.
  // '#' starts a comment line. Well-known CURIE prefixes are accepted in
  // the IRI column.
  static Lexicon from_tsv(std::string_view text);
  static Lexicon from_file(const std::string& path);

  void set_entry(LexiconEntry entry);
  const LexiconEntry* find(std::string_view predicate_iri) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, LexiconEntry, std::less<>> entries_;
};

// Explicit lexicon entry if present, otherwise the predicate's label (or
// split local name) classified as Verb when its first token inflects a
// known English verb, NounPhrase otherwise.
LexiconEntry classify_predicate(const KnowledgeBase& kb, const Term& predicate,
                                const Lexicon& lexicon,
                                std::string_view lang = "en");

// Label words of a resource for surface realization.
std::vector<std::string> realize_resource(const KnowledgeBase& kb,
                                          const Term& r,
                                          std::string_view lang = "en");

// Literal surface form: xsd:date as "March 11, 2013", xsd:integer and
// xsd:decimal as canonical digits, plain and language-tagged text verbatim.
// Unknown datatypes degrade to the verbatim lexical form with a warning
// pushed to `warnings` when provided.
std::vector<std::string> realize_literal(const Term& literal,
                                         std::vector<std::string>* warnings = nullptr);

struct PronounInfo {
  std::string subject_form;     // he / she / they / it
  std::string possessive_form;  // his / her / their / its
};

struct PronounOptions {
  // Flat list standing in for "subclass of Person"; no reasoner is used.
  std::vector<std::string> person_class_iris;
  std::vector<std::string> gender_property_iris;
  // Fall back to a small built-in given-name table when the KB carries no
  // gender triple for a person. Misses still yield singular they.
  bool use_given_name_table = true;

  static PronounOptions defaults();
};

// Pronoun pair for a resource: persons resolve gender from the KB, then the
// given-name table, then default to (they, their); everything else is
// (it, its).
PronounInfo pronoun_of(const KnowledgeBase& kb, const Term& r,
                       const PronounOptions& options = PronounOptions::defaults(),
                       std::string_view lang = "en");

// Content-word synonym table: word <tab> comma-separated alternatives.
class SynonymTable {
 public:
  SynonymTable() = default;
  static SynonymTable from_tsv(std::string_view text);
  static SynonymTable from_file(const std::string& path);

  const std::vector<std::string>* find(std::string_view word_lower) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> table_;
};

// Tiny English morphology used by classification and voice rewriting.
namespace morph {

// True if the token inflects one of the closed-list base verbs
// (cross, influence, own, ...).
bool is_verb_token(std::string_view token);

// "crosses" -> "cross", "marries" -> "marry"; non-3sg forms pass through.
std::string verb_base_from_3sg(std::string_view surface);

// Past participle of a verb surface form ("crosses" -> "crossed",
// "influenced" -> "influenced", "writes" -> "written").
std::string past_participle(std::string_view surface);

// Copula matching the source verb's tense: "crosses" -> "is",
// "influenced" -> "was".
std::string be_for(std::string_view surface);

bool is_be_form(std::string_view word);

}  // namespace morph

}  // namespace kbtext
