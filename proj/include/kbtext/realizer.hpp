#pragma once

#include <string>
#include <vector>

#include "kbtext/kb.hpp"
#include "kbtext/lexicon.hpp"
#include "kbtext/phrase.hpp"
#include "kbtext/subgraph.hpp"

namespace kbtext {

// Half-open [begin, end) in Unicode scalar values. `anchor` is the exact
// substring of the sentence (or document) text the span covers.
struct SpanAnnotation {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string resource_iri;
  std::string anchor;
};

struct RealizedSentence {
  std::string text;
  std::vector<SpanAnnotation> spans;
  std::vector<Triple> source_triples;
  bool is_type_sentence = false;
  PhraseSpec plan;  // kept so paraphrasing can rework the structure
};

struct RealizerOptions {
  std::string language = "en";
  PronounOptions pronouns = PronounOptions::defaults();
};

// One triple, one clause plan: rdf:type becomes "S is a C"; noun-phrase
// predicates become "S's P is O"; verbal predicates become "S V O".
PhraseSpec plan_triple(const KnowledgeBase& kb, const Triple& t,
                       const Lexicon& lexicon, const RealizerOptions& options = {},
                       std::vector<std::string>* warnings = nullptr);

// Joins clauses about one subject with "and", substituting the possessive
// or subject pronoun after the first conjunct. Throws MixedSubjectsError
// when the clauses disagree on their subject. A single spec passes through.
PhraseSpec merge_cluster_sentences(std::vector<PhraseSpec> specs,
                                   const PronounInfo& pronoun);

// Surface text for one plan: words joined by single spaces, first letter
// capitalized, terminating period, spans recorded as the words are laid
// down. Deterministic for identical plans.
RealizedSentence linearize_spec(const PhraseSpec& spec,
                                std::vector<Triple> source_triples);

// Whole-subgraph verbalization, in subgraph order. Summary subgraphs merge
// the triples of the recorded cluster group into one sentence. In a run of
// consecutive sentences about the document's seed, every mention after the
// first is replaced by the seed's pronoun.
std::vector<RealizedSentence> realize_document(
    const KnowledgeBase& kb, const Subgraph& subgraph, const Lexicon& lexicon,
    const RealizerOptions& options = {},
    std::vector<std::string>* warnings = nullptr);

}  // namespace kbtext
