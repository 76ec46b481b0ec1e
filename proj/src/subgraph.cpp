#include "kbtext/subgraph.hpp"

#include <algorithm>
#include <unordered_set>

#include "kbtext/errors.hpp"

namespace kbtext {

std::optional<Strategy> strategy_from_name(std::string_view name) {
  if (name == "star") return Strategy::Star;
  if (name == "symstar") return Strategy::SymmetricStar;
  if (name == "path") return Strategy::Path;
  if (name == "hybrid") return Strategy::Hybrid;
  if (name == "summary") return Strategy::Summary;
  return std::nullopt;
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Star: return "star";
    case Strategy::SymmetricStar: return "symstar";
    case Strategy::Path: return "path";
    case Strategy::Hybrid: return "hybrid";
    case Strategy::Summary: return "summary";
  }
  return "star";
}

uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<Triple> order_triples(std::vector<Triple> triples) {
  struct Keyed {
    uint64_t hash;
    std::string line;
    Triple triple;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(triples.size());
  for (Triple& t : triples) {
    std::string line = t.ntriples();
    keyed.push_back({fnv1a64(line), std::move(line), std::move(t)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.hash != b.hash) return a.hash > b.hash;
    return a.line < b.line;
  });
  std::vector<Triple> out;
  out.reserve(keyed.size());
  for (Keyed& k : keyed) out.push_back(std::move(k.triple));
  return out;
}

namespace {

bool touches_blank(const Triple& t) {
  return t.subject.is_blank() || t.object.is_blank();
}

// Draws the document size and picks that many triples from an ordered
// candidate list, keeping list order. Short lists are taken whole and
// flagged truncated.
void pick_from_ordered(const std::vector<Triple>& ordered,
                       const SizeBounds& bounds, Rng& rng, Subgraph& out) {
  std::size_t cap = std::min(bounds.d_max, ordered.size());
  if (cap < bounds.d_min) {
    out.triples = ordered;
    out.truncated = true;
    return;
  }
  std::size_t d = static_cast<std::size_t>(rng.range(bounds.d_min, cap));
  std::vector<std::size_t> idx = sample_without_replacement(ordered.size(), d, rng);
  std::sort(idx.begin(), idx.end());
  out.triples.reserve(d);
  for (std::size_t i : idx) out.triples.push_back(ordered[i]);
}

std::vector<Triple> star_pool(const KnowledgeBase& kb, const Term& seed) {
  std::vector<Triple> pool;
  for (Triple& t : kb.with_subject(seed)) {
    if (!touches_blank(t)) pool.push_back(std::move(t));
  }
  return pool;
}

struct Hop {
  Triple triple;
  Term far;
};

// Triples incident to `focus` whose far endpoint is an IRI resource.
// Self-loops never qualify; `banned_far` suppresses immediate backtracking.
std::vector<Hop> hop_candidates(const KnowledgeBase& kb, const Term& focus,
                                const Term* banned_far,
                                const std::unordered_set<std::string>& used) {
  std::vector<Hop> hops;
  auto consider = [&](Triple&& t, const Term& far) {
    if (!far.is_iri() || far == focus) return;
    if (banned_far != nullptr && far == *banned_far) return;
    if (used.count(t.ntriples()) != 0) return;
    hops.push_back({std::move(t), far});
  };
  for (Triple& t : kb.with_subject(focus)) {
    Term far = t.object;
    consider(std::move(t), far);
  }
  for (Triple& t : kb.with_object(focus)) {
    Term far = t.subject;
    consider(std::move(t), far);
  }
  return hops;
}

}  // namespace

Subgraph generate_star(const KnowledgeBase& kb, const Term& seed,
                       const SizeBounds& bounds, Rng& rng) {
  std::vector<Triple> pool = star_pool(kb, seed);
  if (pool.empty()) {
    throw EmptyNeighborhoodError("no outgoing triples for seed " +
                                 seed.ntriples());
  }
  Subgraph out;
  out.seed = seed;
  out.strategy = Strategy::Star;
  pick_from_ordered(order_triples(std::move(pool)), bounds, rng, out);
  return out;
}

Subgraph generate_symmetric_star(const KnowledgeBase& kb, const Term& seed,
                                 const SizeBounds& bounds, Rng& rng) {
  std::vector<Triple> pool = star_pool(kb, seed);
  std::unordered_set<std::string> seen;
  for (const Triple& t : pool) seen.insert(t.ntriples());
  for (Triple& t : kb.with_object(seed)) {
    if (!touches_blank(t) && seen.insert(t.ntriples()).second) {
      pool.push_back(std::move(t));
    }
  }
  if (pool.empty()) {
    throw EmptyNeighborhoodError("no incident triples for seed " +
                                 seed.ntriples());
  }
  Subgraph out;
  out.seed = seed;
  out.strategy = Strategy::SymmetricStar;
  pick_from_ordered(order_triples(std::move(pool)), bounds, rng, out);
  return out;
}

Subgraph generate_path(const KnowledgeBase& kb, const Term& seed,
                       const SizeBounds& bounds, Rng& rng,
                       std::size_t max_retries) {
  {
    std::unordered_set<std::string> none;
    if (hop_candidates(kb, seed, nullptr, none).empty()) {
      throw EmptyNeighborhoodError("no resource-valued triples around seed " +
                                   seed.ntriples());
    }
  }

  std::vector<Triple> best;
  for (std::size_t attempt = 0; attempt <= max_retries; ++attempt) {
    std::size_t d = static_cast<std::size_t>(rng.range(bounds.d_min, bounds.d_max));
    std::vector<Triple> walk;
    std::unordered_set<std::string> used;
    Term focus = seed;
    Term prev;
    bool has_prev = false;
    while (walk.size() < d) {
      std::vector<Hop> hops =
          hop_candidates(kb, focus, has_prev ? &prev : nullptr, used);
      if (hops.empty()) break;
      Hop& pick = hops[rng.below(hops.size())];
      used.insert(pick.triple.ntriples());
      walk.push_back(std::move(pick.triple));
      prev = focus;
      has_prev = true;
      focus = pick.far;
    }
    if (walk.size() >= bounds.d_min) {
      return {seed, std::move(walk), Strategy::Path, {}, false};
    }
    if (walk.size() > best.size()) best = std::move(walk);
  }
  return {seed, std::move(best), Strategy::Path, {}, true};
}

Subgraph generate_hybrid(const KnowledgeBase& kb, const Term& seed,
                         const SizeBounds& bounds, Rng& rng,
                         std::size_t max_retries) {
  std::vector<Triple> best;
  bool any_candidate = false;
  for (std::size_t attempt = 0; attempt <= max_retries; ++attempt) {
    std::size_t d = static_cast<std::size_t>(rng.range(bounds.d_min, bounds.d_max));
    std::vector<Triple> acc;
    std::unordered_set<std::string> used;
    Term focus = seed;
    while (acc.size() < d) {
      std::vector<Triple> star;
      for (Triple& t : star_pool(kb, focus)) {
        if (used.count(t.ntriples()) == 0) star.push_back(std::move(t));
      }
      std::vector<Hop> hops = hop_candidates(kb, focus, nullptr, used);
      if (star.empty() && hops.empty()) break;
      any_candidate = true;
      bool take_star = rng.coin();
      if (take_star && star.empty()) take_star = false;
      if (!take_star && hops.empty()) take_star = true;
      if (take_star) {
        Triple& pick = star[rng.below(star.size())];
        used.insert(pick.ntriples());
        acc.push_back(std::move(pick));
      } else {
        Hop& pick = hops[rng.below(hops.size())];
        used.insert(pick.triple.ntriples());
        acc.push_back(std::move(pick.triple));
        focus = pick.far;
      }
    }
    if (acc.size() >= bounds.d_min) {
      return {seed, std::move(acc), Strategy::Hybrid, {}, false};
    }
    if (acc.size() > best.size()) best = std::move(acc);
  }
  if (!any_candidate) {
    throw EmptyNeighborhoodError("no candidate triples around seed " +
                                 seed.ntriples());
  }
  return {seed, std::move(best), Strategy::Hybrid, {}, true};
}

std::vector<PropertyCluster> build_property_clusters(const KnowledgeBase& kb,
                                                     const std::string& class_iri,
                                                     double coverage_threshold) {
  std::vector<Term> instances = kb.instances_of({class_iri});
  if (instances.empty()) {
    throw NoQualifyingPropertiesError("class has no instances: " + class_iri);
  }

  // Per-property triple counts and the set of instances carrying each
  // property. rdf:type and rdfs:label are universal bookkeeping properties,
  // not class-specific ones, so they never qualify.
  std::map<std::string, std::size_t> freq;
  std::map<std::string, std::size_t> bearers;
  std::vector<std::vector<std::string>> props_per_instance;
  props_per_instance.reserve(instances.size());
  for (const Term& r : instances) {
    std::vector<std::string> props;
    for (const Triple& t : kb.with_subject(r)) {
      const std::string& p = t.predicate.value;
      if (p == vocab::kRdfType || p == vocab::kRdfsLabel) continue;
      ++freq[p];
      props.push_back(p);
    }
    std::sort(props.begin(), props.end());
    props.erase(std::unique(props.begin(), props.end()), props.end());
    for (const std::string& p : props) ++bearers[p];
    props_per_instance.push_back(std::move(props));
  }

  const double n = static_cast<double>(instances.size());
  std::vector<std::string> kept;
  for (const auto& [p, count] : bearers) {
    if (static_cast<double>(count) / n >= coverage_threshold) kept.push_back(p);
  }
  if (kept.empty()) {
    throw NoQualifyingPropertiesError(
        "no property of " + class_iri + " reaches coverage " +
        std::to_string(coverage_threshold));
  }

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < kept.size(); ++i) index[kept[i]] = i;

  // Co-occurrence weights between kept properties.
  std::vector<std::vector<double>> weight(kept.size(),
                                          std::vector<double>(kept.size(), 0.0));
  for (const std::vector<std::string>& props : props_per_instance) {
    std::vector<std::size_t> ids;
    for (const std::string& p : props) {
      auto it = index.find(p);
      if (it != index.end()) ids.push_back(it->second);
    }
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        weight[ids[a]][ids[b]] += 1.0;
        weight[ids[b]][ids[a]] += 1.0;
      }
    }
  }

  double edge_sum = 0.0;
  std::size_t edge_count = 0;
  for (std::size_t a = 0; a < kept.size(); ++a) {
    for (std::size_t b = a + 1; b < kept.size(); ++b) {
      if (weight[a][b] > 0.0) {
        edge_sum += weight[a][b];
        ++edge_count;
      }
    }
  }
  const double stop_below =
      edge_count == 0 ? 0.0 : edge_sum / static_cast<double>(edge_count) / 2.0;

  std::vector<std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < kept.size(); ++i) clusters.push_back({i});

  auto inter_mean = [&](const std::vector<std::size_t>& a,
                        const std::vector<std::size_t>& b) {
    double sum = 0.0;
    for (std::size_t x : a) {
      for (std::size_t y : b) sum += weight[x][y];
    }
    return sum / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
  };

  while (clusters.size() > 1) {
    double best = -1.0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        double m = inter_mean(clusters[i], clusters[j]);
        if (m > best) {
          best = m;
          bi = i;
          bj = j;
        }
      }
    }
    if (best <= stop_below) break;
    clusters[bi].insert(clusters[bi].end(), clusters[bj].begin(),
                        clusters[bj].end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
  }

  std::vector<PropertyCluster> out;
  out.reserve(clusters.size());
  for (const std::vector<std::size_t>& member_ids : clusters) {
    PropertyCluster c;
    c.class_iri = class_iri;
    for (std::size_t id : member_ids) c.properties.push_back(kept[id]);
    std::sort(c.properties.begin(), c.properties.end());
    for (const std::string& p : c.properties) {
      c.coverage[p] = static_cast<double>(bearers[p]) / n;
      c.frequency[p] = freq[p];
      c.total_frequency += freq[p];
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const PropertyCluster& a, const PropertyCluster& b) {
              if (a.total_frequency != b.total_frequency) {
                return a.total_frequency > b.total_frequency;
              }
              return a.properties < b.properties;
            });
  return out;
}

Subgraph generate_summary(const KnowledgeBase& kb, const Term& seed,
                          const SizeBounds& bounds, Rng& rng,
                          const std::vector<PropertyCluster>& clusters) {
  std::vector<Triple> pool = star_pool(kb, seed);

  // Per-cluster blocks of the seed's triples, hash-ordered within a block.
  std::vector<std::vector<Triple>> blocks;
  std::size_t available = 0;
  for (const PropertyCluster& c : clusters) {
    std::vector<Triple> block;
    for (const Triple& t : pool) {
      if (std::find(c.properties.begin(), c.properties.end(),
                    t.predicate.value) != c.properties.end()) {
        block.push_back(t);
      }
    }
    if (block.empty()) continue;
    available += block.size();
    blocks.push_back(order_triples(std::move(block)));
  }
  if (blocks.empty()) {
    throw EmptyNeighborhoodError("no clustered properties on seed " +
                                 seed.ntriples());
  }

  Subgraph out;
  out.seed = seed;
  out.strategy = Strategy::Summary;

  std::size_t d;
  std::size_t cap = std::min(bounds.d_max, available);
  if (cap < bounds.d_min) {
    d = available;
    out.truncated = true;
  } else {
    d = static_cast<std::size_t>(rng.range(bounds.d_min, cap));
  }

  for (const std::vector<Triple>& block : blocks) {
    for (const Triple& t : block) {
      if (out.triples.size() == d) break;
      out.triples.push_back(t);
    }
    if (out.triples.size() == d) break;
  }

  // The merge group for the realizer: predicates the first block actually
  // contributed.
  std::size_t first_block_len = std::min(blocks.front().size(), d);
  for (std::size_t i = 0; i < first_block_len; ++i) {
    const std::string& p = out.triples[i].predicate.value;
    if (std::find(out.cluster_properties.begin(), out.cluster_properties.end(),
                  p) == out.cluster_properties.end()) {
      out.cluster_properties.push_back(p);
    }
  }
  return out;
}

}  // namespace kbtext
