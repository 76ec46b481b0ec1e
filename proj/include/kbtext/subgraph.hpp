#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kbtext/kb.hpp"
#include "kbtext/rng.hpp"

namespace kbtext {

struct SizeBounds {
  std::size_t d_min = 1;
  std::size_t d_max = 1;
};

enum class Strategy { Star, SymmetricStar, Path, Hybrid, Summary };

std::optional<Strategy> strategy_from_name(std::string_view name);
std::string_view strategy_name(Strategy s);

// One sampled neighborhood, ready for verbalization. `triples` keeps the
// order the strategy produced: hash order for stars, traversal order for
// walks, cluster order for summaries. `truncated` marks results that fell
// short of d_min because the graph ran out of candidates.
struct Subgraph {
  Term seed;
  std::vector<Triple> triples;
  Strategy strategy = Strategy::Star;
  // Summary only: predicates of the merge group (first contributing
  // cluster); always a subset of the predicates present in `triples`.
  std::vector<std::string> cluster_properties;
  bool truncated = false;
};

uint64_t fnv1a64(std::string_view bytes);

// Canonical triple order: descending 64-bit FNV-1a over the canonical
// N-Triples line, ties broken by the line text itself.
std::vector<Triple> order_triples(std::vector<Triple> triples);

// All strategies reject triples touching blank nodes and throw
// EmptyNeighborhoodError when the seed offers no candidates at all.
Subgraph generate_star(const KnowledgeBase& kb, const Term& seed,
                       const SizeBounds& bounds, Rng& rng);
Subgraph generate_symmetric_star(const KnowledgeBase& kb, const Term& seed,
                                 const SizeBounds& bounds, Rng& rng);

// Resource-to-resource random walk. Dead ends before d_min trigger up to
// `max_retries` fresh walks from the seed; the longest result wins and is
// flagged truncated when still short.
Subgraph generate_path(const KnowledgeBase& kb, const Term& seed,
                       const SizeBounds& bounds, Rng& rng,
                       std::size_t max_retries = 10);

// Unbiased coin per iteration: heads adds one outgoing triple around the
// current focus, tails performs a walk hop and moves the focus. When the
// chosen move has no candidates the other move is tried before giving up.
Subgraph generate_hybrid(const KnowledgeBase& kb, const Term& seed,
                         const SizeBounds& bounds, Rng& rng,
                         std::size_t max_retries = 10);

// Properties that tend to occur together on instances of one class.
// Ordered maps keep reporting deterministic.
struct PropertyCluster {
  std::string class_iri;
  std::vector<std::string> properties;  // sorted lexicographically
  std::map<std::string, double> coverage;
  std::map<std::string, std::size_t> frequency;  // triple counts
  std::size_t total_frequency = 0;
};

// Keeps properties whose instance coverage meets the threshold, weighs
// pairs by how many instances carry both, then greedily merges the cluster
// pair with the highest mean inter-cluster weight until no pair exceeds
// half the initial mean edge weight. rdf:type and rdfs:label describe every
// resource rather than the class and are excluded up front. Result is
// sorted by total property frequency, descending.
std::vector<PropertyCluster> build_property_clusters(const KnowledgeBase& kb,
                                                     const std::string& class_iri,
                                                     double coverage_threshold);

// Consumes clusters in the order given (highest frequency first), adding
// the seed's matching triples until at least d are collected or clusters
// run out; the final cluster's contribution is trimmed to land on d.
Subgraph generate_summary(const KnowledgeBase& kb, const Term& seed,
                          const SizeBounds& bounds, Rng& rng,
                          const std::vector<PropertyCluster>& clusters);

}  // namespace kbtext
