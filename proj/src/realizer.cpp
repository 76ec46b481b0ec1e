#include "kbtext/realizer.hpp"

#include <algorithm>
#include <cctype>

#include "kbtext/errors.hpp"
#include "kbtext/text.hpp"

namespace kbtext {

Phrase Phrase::leaf(std::vector<std::string> words, std::string iri) {
  Phrase p;
  p.kind = PhraseKind::Leaf;
  p.words = std::move(words);
  p.resource_iri = std::move(iri);
  return p;
}

Phrase Phrase::possessive(Phrase owner, Phrase owned) {
  Phrase p;
  p.kind = PhraseKind::Possessive;
  p.children.push_back(std::move(owner));
  p.children.push_back(std::move(owned));
  return p;
}

Phrase Phrase::clause(Phrase subject, Phrase verb, Phrase object) {
  Phrase p;
  p.kind = PhraseKind::Clause;
  p.children.push_back(std::move(subject));
  p.children.push_back(std::move(verb));
  p.children.push_back(std::move(object));
  return p;
}

namespace {

// Accumulates sentence text while tracking scalar-value offsets, so span
// arithmetic never touches byte positions.
class TextBuilder {
 public:
  void word(const std::string& w) {
    if (pending_space_) {
      text_ += ' ';
      ++len_;
      pending_space_ = false;
    }
    text_ += w;
    len_ += cp_length(w);
    pending_space_ = true;
  }

  // Attaches raw characters to the previous word, e.g. the "'s" clitic or
  // a comma.
  void attach(std::string_view raw) {
    text_ += raw;
    len_ += cp_length(raw);
  }

  // Next word starts a span; returns its begin offset.
  std::size_t mark() {
    if (pending_space_) {
      text_ += ' ';
      ++len_;
      pending_space_ = false;
    }
    return len_;
  }

  std::size_t length() const { return len_; }
  std::string take() { return std::move(text_); }

 private:
  std::string text_;
  std::size_t len_ = 0;
  bool pending_space_ = false;
};

void walk(const Phrase& p, TextBuilder& b, std::vector<SpanAnnotation>& spans) {
  switch (p.kind) {
    case PhraseKind::Leaf: {
      if (p.words.empty()) return;
      if (!p.resource_iri.empty()) {
        std::size_t begin = b.mark();
        for (const std::string& w : p.words) b.word(w);
        spans.push_back({begin, b.length(), p.resource_iri, ""});
      } else {
        for (const std::string& w : p.words) b.word(w);
      }
      return;
    }
    case PhraseKind::Possessive: {
      walk(p.children[0], b, spans);
      if (!(p.children[0].kind == PhraseKind::Leaf && p.children[0].genitive)) {
        b.attach("'s");
      }
      walk(p.children[1], b, spans);
      return;
    }
    case PhraseKind::Clause: {
      for (const Phrase& c : p.children) walk(c, b, spans);
      return;
    }
    case PhraseKind::Conjunction: {
      for (std::size_t i = 0; i < p.children.size(); ++i) {
        if (i > 0) {
          if (i + 1 == p.children.size()) {
            b.word("and");
          } else {
            b.attach(",");
          }
        }
        walk(p.children[i], b, spans);
      }
      return;
    }
  }
}

std::vector<std::string> lowercase_words(std::vector<std::string> words) {
  for (std::string& w : words) w = ascii_lower(w);
  return words;
}

bool starts_with_vowel(const std::string& word) {
  if (word.empty()) return false;
  char c = static_cast<char>(std::tolower(static_cast<unsigned char>(word[0])));
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Replaces the subject constituent of one clause with a pronoun, fixing
// copula agreement when the substitute is "they". The pronoun still stands
// for the resource, so it keeps the IRI and remains an annotated mention.
void pronominalize_clause(Phrase& clause, ClauseShape shape,
                          const PronounInfo& pronoun) {
  if (clause.kind != PhraseKind::Clause) return;
  if (shape == ClauseShape::CopulaPossessive) {
    Phrase& subject = clause.children[0];
    if (subject.kind == PhraseKind::Possessive) {
      Phrase owner = Phrase::leaf({pronoun.possessive_form},
                                  subject.children[0].resource_iri);
      owner.genitive = true;
      subject.children[0] = std::move(owner);
    }
    return;
  }
  clause.children[0] =
      Phrase::leaf({pronoun.subject_form}, clause.children[0].resource_iri);
  if (pronoun.subject_form == "they") {
    Phrase& verb = clause.children[1];
    if (!verb.words.empty()) {
      if (verb.words.front() == "is") verb.words.front() = "are";
      if (verb.words.front() == "was") verb.words.front() = "were";
    }
  }
}

}  // namespace

PhraseSpec plan_triple(const KnowledgeBase& kb, const Triple& t,
                       const Lexicon& lexicon, const RealizerOptions& options,
                       std::vector<std::string>* warnings) {
  PhraseSpec spec;
  spec.subject_resource = t.subject;

  Phrase subject = Phrase::leaf(realize_resource(kb, t.subject, options.language),
                                t.subject.is_iri() ? t.subject.value : "");

  if (t.predicate.value == vocab::kRdfType && t.object.is_iri()) {
    // "Albert Einstein is a scientist." The class is predicated, not
    // mentioned, so it carries no annotation span.
    std::vector<std::string> class_words = lowercase_words(
        split_whitespace(kb.label_of(t.object, options.language)));
    std::vector<std::string> object_words;
    object_words.push_back(
        !class_words.empty() && starts_with_vowel(class_words.front()) ? "an"
                                                                       : "a");
    object_words.insert(object_words.end(), class_words.begin(),
                        class_words.end());
    spec.root = Phrase::clause(std::move(subject), Phrase::leaf({"is"}),
                               Phrase::leaf(std::move(object_words)));
    spec.shape = ClauseShape::TypeCopula;
    spec.is_type_sentence = true;
    return spec;
  }

  Phrase object =
      t.object.is_literal()
          ? Phrase::leaf(realize_literal(t.object, warnings))
          : Phrase::leaf(realize_resource(kb, t.object, options.language),
                         t.object.is_iri() ? t.object.value : "");

  LexiconEntry entry = classify_predicate(kb, t.predicate, lexicon,
                                          options.language);
  std::vector<std::string> pred_words = split_whitespace(entry.realization);

  if (entry.category == PredicateCategory::Verb) {
    bool passive = !pred_words.empty() && morph::is_be_form(pred_words.front());
    spec.root = Phrase::clause(std::move(subject),
                               Phrase::leaf(std::move(pred_words)),
                               std::move(object));
    spec.shape = passive ? ClauseShape::PassiveVerb : ClauseShape::TransitiveVerb;
    return spec;
  }

  spec.root = Phrase::clause(
      Phrase::possessive(std::move(subject), Phrase::leaf(std::move(pred_words))),
      Phrase::leaf({"is"}), std::move(object));
  spec.shape = ClauseShape::CopulaPossessive;
  return spec;
}

PhraseSpec merge_cluster_sentences(std::vector<PhraseSpec> specs,
                                   const PronounInfo& pronoun) {
  if (specs.empty()) {
    throw MixedSubjectsError("cannot merge an empty sentence group");
  }
  if (specs.size() == 1) return std::move(specs.front());
  for (const PhraseSpec& s : specs) {
    if (!(s.subject_resource == specs.front().subject_resource)) {
      throw MixedSubjectsError("merge requires a shared subject, got " +
                               specs.front().subject_resource.ntriples() +
                               " and " + s.subject_resource.ntriples());
    }
  }

  PhraseSpec merged;
  merged.shape = ClauseShape::Merged;
  merged.is_type_sentence = false;
  merged.subject_resource = specs.front().subject_resource;
  merged.root.kind = PhraseKind::Conjunction;
  merged.root.children.push_back(std::move(specs.front().root));
  for (std::size_t i = 1; i < specs.size(); ++i) {
    pronominalize_clause(specs[i].root, specs[i].shape, pronoun);
    merged.root.children.push_back(std::move(specs[i].root));
  }
  return merged;
}

RealizedSentence linearize_spec(const PhraseSpec& spec,
                                std::vector<Triple> source_triples) {
  RealizedSentence out;
  TextBuilder b;
  walk(spec.root, b, out.spans);
  std::string text = b.take();
  capitalize_first(text);
  text += ".";
  out.text = std::move(text);
  for (SpanAnnotation& span : out.spans) {
    span.anchor = cp_substr(out.text, span.begin, span.end);
  }
  out.source_triples = std::move(source_triples);
  out.is_type_sentence = spec.is_type_sentence;
  out.plan = spec;
  return out;
}

std::vector<RealizedSentence> realize_document(
    const KnowledgeBase& kb, const Subgraph& subgraph, const Lexicon& lexicon,
    const RealizerOptions& options, std::vector<std::string>* warnings) {
  struct Planned {
    PhraseSpec spec;
    std::vector<Triple> sources;
  };
  std::vector<Planned> planned;

  bool merge = subgraph.strategy == Strategy::Summary &&
               !subgraph.cluster_properties.empty();
  if (merge) {
    std::vector<Triple> group;
    std::vector<Triple> rest;
    for (const Triple& t : subgraph.triples) {
      bool in_group =
          std::find(subgraph.cluster_properties.begin(),
                    subgraph.cluster_properties.end(),
                    t.predicate.value) != subgraph.cluster_properties.end();
      (in_group ? group : rest).push_back(t);
    }
    if (!group.empty()) {
      std::vector<PhraseSpec> specs;
      specs.reserve(group.size());
      for (const Triple& t : group) {
        specs.push_back(plan_triple(kb, t, lexicon, options, warnings));
      }
      PronounInfo pronoun =
          pronoun_of(kb, subgraph.seed, options.pronouns, options.language);
      planned.push_back(
          {merge_cluster_sentences(std::move(specs), pronoun), group});
    }
    for (const Triple& t : rest) {
      planned.push_back({plan_triple(kb, t, lexicon, options, warnings), {t}});
    }
  } else {
    for (const Triple& t : subgraph.triples) {
      planned.push_back({plan_triple(kb, t, lexicon, options, warnings), {t}});
    }
  }

  // Replace repeated seed mentions inside a run of consecutive sentences
  // sharing the seed as subject. A break in the run restores the full name.
  PronounInfo pronoun;
  bool pronoun_ready = false;
  bool prev_is_seed = false;
  for (Planned& p : planned) {
    bool is_seed = p.spec.subject_resource == subgraph.seed;
    if (is_seed && prev_is_seed && p.spec.shape != ClauseShape::Merged) {
      if (!pronoun_ready) {
        pronoun = pronoun_of(kb, subgraph.seed, options.pronouns, options.language);
        pronoun_ready = true;
      }
      pronominalize_clause(p.spec.root, p.spec.shape, pronoun);
    }
    prev_is_seed = is_seed;
  }

  std::vector<RealizedSentence> out;
  out.reserve(planned.size());
  for (Planned& p : planned) {
    out.push_back(linearize_spec(p.spec, std::move(p.sources)));
  }
  return out;
}

}  // namespace kbtext
