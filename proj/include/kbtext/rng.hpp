#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace kbtext {

// Serializable generator descriptor. mt19937_64 raw output is pinned by the
// C++ standard, and all bounded draws below avoid std::*_distribution, whose
// results vary between standard libraries. Together that makes every stream
// byte-for-byte reproducible across platforms.
struct RngState {
  uint64_t seed = 0;
  std::string algorithm = "mt19937_64";
};

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_{seed}, engine_(seed) {}
  explicit Rng(const RngState& state);

  const RngState& state() const { return state_; }

  uint64_t next() { return engine_(); }

  // Unbiased integer in [0, n), n >= 1, via rejection sampling.
  uint64_t below(uint64_t n);

  // Unbiased integer in [lo, hi], inclusive.
  uint64_t range(uint64_t lo, uint64_t hi) { return lo + below(hi - lo + 1); }

  bool coin() { return below(2) == 1; }

  // Independent substream for one work item. Distinct salts separate the
  // draws that shape a document from the draws that paraphrase it, so
  // toggling paraphrasing never disturbs sampling.
  static uint64_t derive(uint64_t master, uint64_t index, uint64_t salt);

  static constexpr uint64_t kSaltGenerate = 0x67656e6572617465ULL;
  static constexpr uint64_t kSaltParaphrase = 0x7061726170687261ULL;
  static constexpr uint64_t kSaltSeeds = 0x7365656473ULL;

 private:
  RngState state_;
  std::mt19937_64 engine_;
};

// First k of a Fisher-Yates shuffle over [0, n), in draw order.
std::vector<std::size_t> sample_without_replacement(std::size_t n,
                                                    std::size_t k, Rng& rng);

}  // namespace kbtext
