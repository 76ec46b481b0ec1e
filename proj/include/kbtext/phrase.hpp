#pragma once

#include <string>
#include <vector>

#include "kbtext/term.hpp"

namespace kbtext {

// Sentence plans are small dependency-style trees. A leaf is a run of
// surface words, optionally tagged with the IRI of the resource it mentions;
// tagged leaves become annotation spans at linearization time.
enum class PhraseKind { Leaf, Possessive, Clause, Conjunction };

struct Phrase {
  PhraseKind kind = PhraseKind::Leaf;

  // Leaf payload.
  std::vector<std::string> words;
  std::string resource_iri;  // non-empty marks an entity mention
  bool genitive = false;     // already possessive ("his"); no clitic added

  // Possessive: [owner, owned]. Clause: [subject, verb, object].
  // Conjunction: two or more conjunct clauses.
  std::vector<Phrase> children;

  static Phrase leaf(std::vector<std::string> words, std::string iri = "");
  static Phrase possessive(Phrase owner, Phrase owned);
  static Phrase clause(Phrase subject, Phrase verb, Phrase object);
};

// How the clause was built; drives pronoun substitution and voice rewriting.
enum class ClauseShape {
  CopulaPossessive,  // S's P is O
  TransitiveVerb,    // S V O
  PassiveVerb,       // S was V-en ... O  (no agent; not invertible)
  TypeCopula,        // S is a C
  Merged,            // conjunction of clauses about one subject
};

struct PhraseSpec {
  Phrase root;
  ClauseShape shape = ClauseShape::CopulaPossessive;
  bool is_type_sentence = false;
  Term subject_resource;  // shared subject; merge precondition
};

}  // namespace kbtext
