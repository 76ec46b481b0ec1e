#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kbtext/kb.hpp"
#include "kbtext/lexicon.hpp"
#include "kbtext/realizer.hpp"
#include "kbtext/subgraph.hpp"

namespace kbtext {

struct GenerationConfig {
  std::string kb_path;
  std::vector<std::string> class_iris;
  Strategy strategy = Strategy::Star;
  std::size_t document_count = 100;
  SizeBounds bounds{1, 5};
  bool paraphrase = false;
  uint64_t master_seed = 0;
  std::string language = "en";
  double coverage_threshold = 0.60;  // summary clustering
  std::string lexicon_path;          // optional
  std::string synonym_path;          // optional
  std::size_t jobs = 0;              // 0 = available parallelism
};

struct Document {
  std::string id;
  std::string text;
  // Document-scope offsets, Unicode scalar values, half open.
  std::vector<SpanAnnotation> annotations;
  Subgraph provenance;
  bool truncated = false;
};

struct Corpus {
  std::vector<Document> documents;
  GenerationConfig config;
  std::string generator_version;
  std::vector<std::string> warnings;
};

// Zero-padded decimal index, wide enough for the last document of the run.
std::string document_id(std::size_t index, std::size_t count);

// "dbo:Scientist, dbo:Person" -> full IRIs; well-known CURIE prefixes are
// expanded, anything else passes through.
std::vector<std::string> split_class_list(std::string_view csv);

// Flat key=value file mirroring the generate flags (kb, classes, strategy,
// docs, dmin, dmax, paraphrase, seed, language, coverage-threshold,
// lexicon, synonyms, jobs). '#' starts a comment. Unknown keys throw.
GenerationConfig parse_config(std::string_view text,
                              GenerationConfig base = {});
GenerationConfig load_config_file(const std::string& path,
                                  GenerationConfig base = {});

// Draws one seed per document, samples a subgraph, realizes it, and
// (optionally) paraphrases it. Every document consumes RNG streams derived
// from (master_seed, document index), so results are byte-identical for any
// worker count. A seed whose neighborhood is empty is replaced by a fresh
// draw, up to 100 extra attempts per slot, after which
// GenerationExhaustedError is thrown.
Corpus generate_corpus(const KnowledgeBase& kb, const GenerationConfig& config,
                       const Lexicon& lexicon,
                       const SynonymTable& synonyms = {});

// Convenience entry point that loads the KB, lexicon, and synonym table
// from the paths in the config.
Corpus generate_corpus(const GenerationConfig& config);

}  // namespace kbtext
