#include "kbtext/seeds.hpp"

#include "kbtext/errors.hpp"

namespace kbtext {

std::vector<Term> select_seeds(const KnowledgeBase& kb, const SeedSpec& spec,
                               Rng& rng, SeedReport* report) {
  std::vector<Term> pool = kb.instances_of(spec.class_iris);
  if (pool.empty()) {
    std::string classes;
    for (const std::string& c : spec.class_iris) {
      if (!classes.empty()) classes += ", ";
      classes += c;
    }
    throw NoSeedsError("no instances found for classes: " + classes);
  }

  std::vector<Term> out;
  out.reserve(spec.count);
  std::size_t distinct = std::min(spec.count, pool.size());
  for (std::size_t idx : sample_without_replacement(pool.size(), distinct, rng)) {
    out.push_back(pool[idx]);
  }
  if (spec.count > pool.size()) {
    if (report) {
      report->warnings.push_back(
          "seed count " + std::to_string(spec.count) + " exceeds pool size " +
          std::to_string(pool.size()) + "; continuing with replacement");
    }
    while (out.size() < spec.count) {
      out.push_back(pool[rng.below(pool.size())]);
    }
  }
  return out;
}

}  // namespace kbtext
