#include "kbtext/rng.hpp"

#include <numeric>

#include "kbtext/errors.hpp"

namespace kbtext {

Rng::Rng(const RngState& state) : state_(state), engine_(state.seed) {
  if (state.algorithm != "mt19937_64") {
    throw Error("unsupported rng algorithm: " + state.algorithm);
  }
}

uint64_t Rng::below(uint64_t n) {
  // threshold = 2^64 mod n; rejecting values under it removes modulo bias.
  uint64_t threshold = (0 - n) % n;
  for (;;) {
    uint64_t r = engine_();
    if (r >= threshold) return r % n;
  }
}

static uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t Rng::derive(uint64_t master, uint64_t index, uint64_t salt) {
  // splitmix64-style finalizer over a weighed sum; good dispersion is all
  // that is needed here, not cryptographic strength.
  uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1) +
               0x632BE59BD9B4E019ULL * salt;
  return mix64(mix64(z) ^ salt);
}

std::vector<std::size_t> sample_without_replacement(std::size_t n,
                                                    std::size_t k, Rng& rng) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  if (k > n) k = n;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

}  // namespace kbtext
