#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kbtext/corpus.hpp"

namespace kbtext {

struct CorpusStats {
  std::size_t document_count = 0;  // |C|
  std::size_t token_count = 0;     // |T|
  std::size_t entity_count = 0;    // |E|
  double tokens_per_doc = 0.0;     // |T| / |C|
  double entities_per_doc = 0.0;   // |E| / |C|
  double entity_density = 0.0;     // |E| / |T|
  // Ratios are 0 when their denominator is 0.
};

// Whitespace-delimited tokens with leading and trailing ASCII punctuation
// stripped. Tokens that were punctuation only are dropped, so
// "Albert Einstein was born in Ulm." counts 6 tokens.
std::vector<std::string> tokenize(std::string_view text);
std::size_t count_tokens(std::string_view text);

CorpusStats compute_stats(const std::vector<Document>& documents);
CorpusStats compute_stats(const Corpus& corpus);

// Sample Pearson correlation coefficient. Throws DegenerateInputError when
// the vectors differ in length, hold fewer than two points, or either has
// zero variance.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

// Header line plus one data row, tab separated:
// docs tokens entities tokens_per_doc entities_per_doc entity_density.
std::string stats_tsv(const CorpusStats& stats);

}  // namespace kbtext
