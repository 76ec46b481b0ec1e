#include "kbtext/stats.hpp"

#include <cmath>
#include <cstdio>

#include "kbtext/errors.hpp"
#include "kbtext/text.hpp"

namespace kbtext {

namespace {

bool ascii_punct(char c) {
  unsigned char b = static_cast<unsigned char>(c);
  return b < 0x80 && b > 0x20 && !ascii_alnum_byte(c);
}

std::string strip_punct(const std::string& token) {
  std::size_t b = 0, e = token.size();
  while (b < e && ascii_punct(token[b])) ++b;
  while (e > b && ascii_punct(token[e - 1])) --e;
  return token.substr(b, e - b);
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (std::string& raw : split_whitespace(text)) {
    std::string token = strip_punct(raw);
    if (!token.empty()) out.push_back(std::move(token));
  }
  return out;
}

std::size_t count_tokens(std::string_view text) { return tokenize(text).size(); }

CorpusStats compute_stats(const std::vector<Document>& documents) {
  CorpusStats s;
  s.document_count = documents.size();
  for (const Document& doc : documents) {
    s.token_count += count_tokens(doc.text);
    s.entity_count += doc.annotations.size();
  }
  if (s.document_count) {
    s.tokens_per_doc =
        static_cast<double>(s.token_count) / static_cast<double>(s.document_count);
    s.entities_per_doc = static_cast<double>(s.entity_count) /
                         static_cast<double>(s.document_count);
  }
  if (s.token_count) {
    s.entity_density =
        static_cast<double>(s.entity_count) / static_cast<double>(s.token_count);
  }
  return s;
}

CorpusStats compute_stats(const Corpus& corpus) {
  return compute_stats(corpus.documents);
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) {
    throw DegenerateInputError("length mismatch: " + std::to_string(xs.size()) +
                               " vs " + std::to_string(ys.size()));
  }
  if (xs.size() < 2) {
    throw DegenerateInputError("need at least two points");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw DegenerateInputError("zero variance input");
  }
  return sxy / std::sqrt(sxx * syy);
}

std::string stats_tsv(const CorpusStats& stats) {
  std::string out =
      "docs\ttokens\tentities\ttokens_per_doc\tentities_per_doc\tentity_density\n";
  out += std::to_string(stats.document_count);
  out += '\t';
  out += std::to_string(stats.token_count);
  out += '\t';
  out += std::to_string(stats.entity_count);
  out += '\t';
  out += fixed6(stats.tokens_per_doc);
  out += '\t';
  out += fixed6(stats.entities_per_doc);
  out += '\t';
  out += fixed6(stats.entity_density);
  out += '\n';
  return out;
}

}  // namespace kbtext
