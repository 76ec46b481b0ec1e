#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kbtext/kb.hpp"
#include "kbtext/rng.hpp"

namespace kbtext {

struct SeedSpec {
  std::vector<std::string> class_iris;
  std::size_t count = 1;
};

struct SeedReport {
  // Set when count exceeded the pool and sampling continued with
  // replacement.
  std::vector<std::string> warnings;
};

// Uniformly samples seed resources from the instances of the given classes.
// Distinct seeds while the pool lasts; with-replacement afterwards (noted in
// the report). Throws NoSeedsError on an empty pool.
std::vector<Term> select_seeds(const KnowledgeBase& kb, const SeedSpec& spec,
                               Rng& rng, SeedReport* report = nullptr);

}  // namespace kbtext
