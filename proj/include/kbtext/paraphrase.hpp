#pragma once

#include <string_view>

#include "kbtext/kb.hpp"
#include "kbtext/lexicon.hpp"
#include "kbtext/realizer.hpp"
#include "kbtext/rng.hpp"

namespace kbtext {

// Structural alternation, applied with probability 0.5 per sentence:
// active transitive clauses turn passive ("X influenced Y" -> "Y was
// influenced by X") and possessive copulas front their complement ("Its
// type is T" -> "T is its type"). Agentless passive sources and type
// sentences pass through unchanged. Annotated resources keep their IRIs;
// spans are recomputed from the rewritten plan.
RealizedSentence swap_voice(const RealizedSentence& sentence, Rng& rng);

// Lexical substitution: each entity mention may switch to an alternative
// KB label of the same resource (IRI unchanged, span updated), and each
// non-entity content word may be replaced through the synonym table. At
// most one substitution per token position.
RealizedSentence substitute_synonyms(const RealizedSentence& sentence,
                                     const KnowledgeBase& kb,
                                     const SynonymTable& synonyms, Rng& rng,
                                     std::string_view lang = "en");

// Full per-sentence pipeline: voice swap, then lexical substitution.
// Sentences derived from rdf:type are returned byte-identical.
RealizedSentence paraphrase_sentence(const RealizedSentence& sentence,
                                     const KnowledgeBase& kb,
                                     const SynonymTable& synonyms, Rng& rng,
                                     std::string_view lang = "en");

}  // namespace kbtext
