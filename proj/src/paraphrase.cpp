#include "kbtext/paraphrase.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "kbtext/text.hpp"

namespace kbtext {

namespace {

// Depth-first, which is also surface order; keeps RNG consumption stable.
template <typename Fn>
void for_each_leaf(Phrase& p, Fn&& fn) {
  if (p.kind == PhraseKind::Leaf) {
    fn(p);
    return;
  }
  for (auto& child : p.children) for_each_leaf(child, fn);
}

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace

RealizedSentence swap_voice(const RealizedSentence& sentence, Rng& rng) {
  const PhraseSpec& plan = sentence.plan;
  bool eligible = !sentence.is_type_sentence &&
                  (plan.shape == ClauseShape::TransitiveVerb ||
                   plan.shape == ClauseShape::CopulaPossessive) &&
                  plan.root.kind == PhraseKind::Clause &&
                  plan.root.children.size() == 3;
  if (!eligible) return sentence;
  if (!rng.coin()) return sentence;

  PhraseSpec swapped = plan;
  auto& kids = swapped.root.children;
  if (plan.shape == ClauseShape::TransitiveVerb) {
    // S V O  ->  O be V-en (rest) by S
    Phrase& verb = kids[1];
    if (verb.kind != PhraseKind::Leaf || verb.words.empty()) return sentence;
    std::vector<std::string> vw;
    vw.push_back(morph::be_for(verb.words.front()));
    vw.push_back(morph::past_participle(verb.words.front()));
    vw.insert(vw.end(), verb.words.begin() + 1, verb.words.end());
    vw.push_back("by");
    verb.words = std::move(vw);
    std::swap(kids[0], kids[2]);
    swapped.shape = ClauseShape::PassiveVerb;
  } else {
    // S's P is O  ->  O is S's P
    std::swap(kids[0], kids[2]);
  }
  RealizedSentence out = linearize_spec(swapped, sentence.source_triples);
  out.is_type_sentence = sentence.is_type_sentence;
  return out;
}

RealizedSentence substitute_synonyms(const RealizedSentence& sentence,
                                     const KnowledgeBase& kb,
                                     const SynonymTable& synonyms, Rng& rng,
                                     std::string_view lang) {
  if (sentence.is_type_sentence) return sentence;
  PhraseSpec plan = sentence.plan;
  bool changed = false;
  for_each_leaf(plan.root, [&](Phrase& leaf) {
    // Genitive pronouns stay put: the linearizer adds no clitic after them,
    // so swapping in a label would drop the possessive marking.
    if (leaf.genitive) return;
    if (!leaf.resource_iri.empty()) {
      // Entity mention: maybe switch to an alternative label of the same
      // resource. The IRI, and therefore the annotation, is unchanged.
      const auto* labels = kb.labels(leaf.resource_iri);
      if (!labels) return;
      std::string current = join_words(leaf.words);
      std::vector<const Label*> alternatives;
      for (const auto& label : *labels) {
        if (!label.language.empty() && label.language != lang) continue;
        if (label.text != current) alternatives.push_back(&label);
      }
      if (alternatives.empty() || !rng.coin()) return;
      const Label* pick =
          alternatives.size() == 1
              ? alternatives.front()
              : alternatives[static_cast<std::size_t>(
                    rng.below(alternatives.size()))];
      auto words = split_whitespace(pick->text);
      if (!words.empty()) {
        leaf.words = std::move(words);
        changed = true;
      }
      return;
    }
    for (auto& word : leaf.words) {
      const auto* options = synonyms.find(ascii_lower(word));
      if (!options || options->empty() || !rng.coin()) continue;
      std::string replacement =
          options->size() == 1
              ? options->front()
              : (*options)[static_cast<std::size_t>(rng.below(options->size()))];
      if (!word.empty() && std::isupper(static_cast<unsigned char>(word[0])) &&
          !replacement.empty()) {
        replacement[0] = static_cast<char>(
            std::toupper(static_cast<unsigned char>(replacement[0])));
      }
      word = std::move(replacement);
      changed = true;
    }
  });
  if (!changed) return sentence;
  RealizedSentence out = linearize_spec(plan, sentence.source_triples);
  out.is_type_sentence = sentence.is_type_sentence;
  return out;
}

RealizedSentence paraphrase_sentence(const RealizedSentence& sentence,
                                     const KnowledgeBase& kb,
                                     const SynonymTable& synonyms, Rng& rng,
                                     std::string_view lang) {
  if (sentence.is_type_sentence) return sentence;
  RealizedSentence swapped = swap_voice(sentence, rng);
  return substitute_synonyms(swapped, kb, synonyms, rng, lang);
}

}  // namespace kbtext
