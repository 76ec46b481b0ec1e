#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "kbtext/errors.hpp"
#include "kbtext/kb.hpp"
#include "kbtext/rng.hpp"
#include "kbtext/seeds.hpp"
#include "kbtext/subgraph.hpp"
#include "test_support.hpp"

using namespace kbtext;

namespace {

// Independent FNV-1a for cross-checking; deliberately written differently
// from the library (index loop, hex constants).
uint64_t fnv_oracle(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < s.size(); ++i) {
    h = (h ^ static_cast<unsigned char>(s[i])) * 0x100000001b3ULL;
  }
  return h;
}

Term albert() { return Term::iri("http://dbpedia.org/resource/Albert_Einstein"); }
Term ulm() { return Term::iri("http://dbpedia.org/resource/Ulm"); }

bool touches(const Triple& t, const Term& r) {
  return t.subject == r || t.object == r;
}

Term far_end(const Triple& t, const Term& focus) {
  return t.subject == focus ? t.object : t.subject;
}

}  // namespace

TEST_CASE("fnv1a64 matches the reference vectors and an independent oracle") {
  CHECK(fnv1a64("") == 14695981039346656037ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
  for (const char* s : {"x", "<http://a> <http://b> <http://c> .",
                        "M\xc3\xbcnchen", "longer input with spaces"}) {
    CHECK(fnv1a64(s) == fnv_oracle(s));
  }
}

TEST_CASE("order_triples sorts by descending line hash, independent of input order") {
  KnowledgeBase kb = load_kb(data_path("einstein.nt"));
  std::vector<Triple> a = kb.triples();
  std::vector<Triple> b = a;
  std::reverse(b.begin(), b.end());
  std::vector<Triple> oa = order_triples(a);
  std::vector<Triple> ob = order_triples(b);
  REQUIRE(oa.size() == 6);
  CHECK(oa == ob);
  for (std::size_t i = 1; i < oa.size(); ++i) {
    CHECK(fnv_oracle(oa[i - 1].ntriples()) > fnv_oracle(oa[i].ntriples()));
  }
}

TEST_CASE("star picks outgoing triples of the seed") {
  KnowledgeBase kb = load_kb(data_path("einstein.nt"));
  Rng rng(11);
  std::set<std::string> seen_sets;
  for (int i = 0; i < 50; ++i) {
    Subgraph g = generate_star(kb, albert(), {2, 2}, rng);
    REQUIRE(g.triples.size() == 2);
    CHECK(g.strategy == Strategy::Star);
    CHECK(!g.truncated);
    std::set<std::string> lines;
    for (const Triple& t : g.triples) {
      CHECK(t.subject == albert());
      lines.insert(t.ntriples());
    }
    CHECK(lines.size() == 2);  // distinct picks
    std::string key;
    for (const std::string& l : lines) key += l;
    seen_sets.insert(key);
  }
  // 5 outgoing triples give 10 possible pairs; sampling must show variety
  CHECK(seen_sets.size() > 1);
}

TEST_CASE("star size respects bounds and truncates short pools") {
  KnowledgeBase kb = load_kb(data_path("einstein.nt"));
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    Subgraph g = generate_star(kb, albert(), {2, 5}, rng);
    CHECK(g.triples.size() >= 2);
    CHECK(g.triples.size() <= 5);
  }
  // only 5 outgoing triples exist, so d_min 6 cannot be met
  Subgraph all = generate_star(kb, albert(), {6, 9}, rng);
  CHECK(all.triples.size() == 5);
  CHECK(all.truncated);
}

TEST_CASE("star throws on a seed without outgoing triples") {
  KnowledgeBase kb = load_kb(data_path("einstein.nt"));
  Rng rng(1);
  CHECK_THROWS_AS(
      generate_star(kb, Term::iri("http://dbpedia.org/resource/Germany"),
                    {1, 2}, rng),
      EmptyNeighborhoodError);
}

TEST_CASE("star never touches blank nodes") {
  KnowledgeBase kb = parse_ntriples(
      "<http://x/s> <http://x/p> <http://x/o> .\n"
      "<http://x/s> <http://x/q> _:hidden .\n");
  Rng rng(4);
  for (int i = 0; i < 10; ++i) {
    Subgraph g = generate_star(kb, Term::iri("http://x/s"), {1, 2}, rng);
    for (const Triple& t : g.triples) CHECK(!t.object.is_blank());
  }
}

TEST_CASE("symmetric star adds incoming triples") {
  KnowledgeBase kb = load_kb(data_path("einstein.nt"));
  Rng rng(9);
  // Ulm has exactly one outgoing (country) and one incoming (birthPlace)
  Subgraph g = generate_symmetric_star(kb, ulm(), {2, 2}, rng);
  REQUIRE(g.triples.size() == 2);
  std::set<std::string> preds;
  for (const Triple& t : g.triples) {
    CHECK(touches(t, ulm()));
    preds.insert(t.predicate.value);
  }
  CHECK(preds == std::set<std::string>{
                     "http://dbpedia.org/ontology/birthPlace",
                     "http://dbpedia.org/ontology/country"});
  // plain star can never reach the incoming triple
  for (int i = 0; i < 20; ++i) {
    Subgraph s = generate_star(kb, ulm(), {1, 2}, rng);
    for (const Triple& t : s.triples) CHECK(t.subject == ulm());
  }
}

TEST_CASE("path walks a connected chain from the seed") {
  KnowledgeBase kb = load_kb(data_path("synth500.nt"));
  std::vector<Term> seeds =
      kb.instances_of({"http://dbpedia.org/ontology/Person"});
  REQUIRE(seeds.size() == 40);
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const Term& seed = seeds[rng.below(seeds.size())];
    Subgraph g = generate_path(kb, seed, {1, 4}, rng);
    REQUIRE(!g.triples.empty());
    CHECK(g.strategy == Strategy::Path);
    // replay: every triple extends the walk at the current focus
    Term focus = seed;
    for (const Triple& t : g.triples) {
      REQUIRE(touches(t, focus));
      Term next = far_end(t, focus);
      CHECK(next.is_iri());
      focus = next;
    }
    if (!g.truncated) CHECK(g.triples.size() >= 1);
  }
}

TEST_CASE("path marks dead ends as truncated") {
  KnowledgeBase kb = parse_ntriples(
      "<http://x/a> <http://x/p> <http://x/b> .\n");
  Rng rng(2);
  Subgraph g = generate_path(kb, Term::iri("http://x/a"), {2, 4}, rng);
  CHECK(g.truncated);
  CHECK(g.triples.size() == 1);

  // a seed with no resource-valued triples at all refuses outright
  KnowledgeBase lits = parse_ntriples(
      "<http://x/a> <http://x/p> \"just text\" .\n");
  CHECK_THROWS_AS(generate_path(lits, Term::iri("http://x/a"), {1, 2}, rng),
                  EmptyNeighborhoodError);
}

TEST_CASE("path never repeats a triple or doubles straight back") {
  KnowledgeBase kb = load_kb(data_path("synth500.nt"));
  std::vector<Term> seeds =
      kb.instances_of({"http://dbpedia.org/ontology/Person"});
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    Subgraph g = generate_path(kb, seeds[rng.below(seeds.size())], {2, 5}, rng);
    std::set<std::string> lines;
    for (const Triple& t : g.triples) CHECK(lines.insert(t.ntriples()).second);
  }
}

TEST_CASE("hybrid grows a connected neighborhood") {
  KnowledgeBase kb = load_kb(data_path("synth500.nt"));
  std::vector<Term> seeds =
      kb.instances_of({"http://dbpedia.org/ontology/Person"});
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    Subgraph g = generate_hybrid(kb, seeds[rng.below(seeds.size())], {1, 5}, rng);
    REQUIRE(!g.triples.empty());
    CHECK(g.strategy == Strategy::Hybrid);
    // replay: each triple touches the visited set, which then absorbs it
    std::set<std::string> visited{g.seed.ntriples()};
    std::set<std::string> lines;
    for (const Triple& t : g.triples) {
      CHECK(lines.insert(t.ntriples()).second);
      bool connected = visited.count(t.subject.ntriples()) != 0 ||
                       visited.count(t.object.ntriples()) != 0;
      CHECK(connected);
      visited.insert(t.subject.ntriples());
      if (t.object.is_iri()) visited.insert(t.object.ntriples());
    }
    if (!g.truncated) {
      CHECK(g.triples.size() >= 1);
      CHECK(g.triples.size() <= 5);
    }
  }
}

TEST_CASE("property clustering groups co-occurring predicates") {
  // 20 persons; 10 carry birthPlace+deathPlace together, 8 carry spouse,
  // exactly one person carries all three. Pair weights are then 10 for
  // (birth, death) and 1 for each spouse pairing, so the greedy pass merges
  // birthPlace with deathPlace and leaves spouse alone.
  KnowledgeBase kb = load_kb(data_path("cluster.nt"));
  std::vector<PropertyCluster> clusters = build_property_clusters(
      kb, "http://example.org/onto/Person", 0.25);
  REQUIRE(clusters.size() == 2);
  CHECK(clusters[0].properties ==
        std::vector<std::string>{"http://example.org/onto/birthPlace",
                                 "http://example.org/onto/deathPlace"});
  CHECK(clusters[1].properties ==
        std::vector<std::string>{"http://example.org/onto/spouse"});
  CHECK(clusters[0].total_frequency == 20);
  CHECK(clusters[1].total_frequency == 8);
  CHECK(clusters[0].frequency.at("http://example.org/onto/birthPlace") == 10);
  CHECK(clusters[0].frequency.at("http://example.org/onto/deathPlace") == 10);
  CHECK(clusters[1].frequency.at("http://example.org/onto/spouse") == 8);
  CHECK(clusters[0].coverage.at("http://example.org/onto/birthPlace") ==
        doctest::Approx(0.5));
}

TEST_CASE("clustering ignores rdf:type and rdfs:label") {
  KnowledgeBase kb = load_kb(data_path("cluster.nt"));
  std::vector<PropertyCluster> clusters = build_property_clusters(
      kb, "http://example.org/onto/Person", 0.25);
  for (const PropertyCluster& c : clusters) {
    for (const std::string& p : c.properties) {
      CHECK(p != std::string(vocab::kRdfType));
      CHECK(p != std::string(vocab::kRdfsLabel));
    }
  }
}

TEST_CASE("clustering threshold filters and can empty the field") {
  KnowledgeBase kb = load_kb(data_path("cluster.nt"));
  CHECK_THROWS_AS(build_property_clusters(
                      kb, "http://example.org/onto/Person", 0.9),
                  NoQualifyingPropertiesError);
  CHECK_THROWS_AS(build_property_clusters(kb, "http://example.org/onto/Ghost",
                                          0.5),
                  NoQualifyingPropertiesError);
}

TEST_CASE("zero co-occurrence keeps properties apart") {
  KnowledgeBase kb = parse_ntriples(
      "<http://x/i1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://x/C> .\n"
      "<http://x/i1> <http://x/p1> <http://x/o> .\n"
      "<http://x/i2> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://x/C> .\n"
      "<http://x/i2> <http://x/p1> <http://x/o> .\n"
      "<http://x/i3> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://x/C> .\n"
      "<http://x/i3> <http://x/p2> <http://x/o> .\n"
      "<http://x/i4> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://x/C> .\n"
      "<http://x/i4> <http://x/p2> <http://x/o> .\n");
  std::vector<PropertyCluster> clusters =
      build_property_clusters(kb, "http://x/C", 0.5);
  REQUIRE(clusters.size() == 2);
  CHECK(clusters[0].properties.size() == 1);
  CHECK(clusters[1].properties.size() == 1);
}

TEST_CASE("summary fills from clusters in order and trims to size") {
  KnowledgeBase kb = load_kb(data_path("cluster.nt"));
  std::vector<PropertyCluster> clusters = build_property_clusters(
      kb, "http://example.org/onto/Person", 0.25);
  Rng rng(8);

  // p10 carries birthPlace, deathPlace, and spouse
  Term p10 = Term::iri("http://example.org/res/p10");
  Subgraph two = generate_summary(kb, p10, {2, 2}, rng, clusters);
  REQUIRE(two.triples.size() == 2);
  std::set<std::string> preds;
  for (const Triple& t : two.triples) preds.insert(t.predicate.value);
  CHECK(preds == std::set<std::string>{"http://example.org/onto/birthPlace",
                                       "http://example.org/onto/deathPlace"});
  CHECK(two.cluster_properties.size() == 2);
  CHECK(!two.truncated);

  Subgraph three = generate_summary(kb, p10, {3, 3}, rng, clusters);
  REQUIRE(three.triples.size() == 3);
  CHECK(three.triples[2].predicate.value == "http://example.org/onto/spouse");
  // the merge group stays what the first cluster contributed
  std::set<std::string> group(three.cluster_properties.begin(),
                              three.cluster_properties.end());
  CHECK(group == std::set<std::string>{"http://example.org/onto/birthPlace",
                                       "http://example.org/onto/deathPlace"});
}

TEST_CASE("summary truncates when the seed runs out of clustered triples") {
  KnowledgeBase kb = load_kb(data_path("cluster.nt"));
  std::vector<PropertyCluster> clusters = build_property_clusters(
      kb, "http://example.org/onto/Person", 0.25);
  Rng rng(8);
  // p01 has only birthPlace and deathPlace
  Subgraph g = generate_summary(kb, Term::iri("http://example.org/res/p01"),
                                {3, 4}, rng, clusters);
  CHECK(g.triples.size() == 2);
  CHECK(g.truncated);

  // a seed with no clustered property at all
  KnowledgeBase mini = parse_ntriples(
      "<http://x/i> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://example.org/onto/Person> .\n");
  CHECK_THROWS_AS(
      generate_summary(mini, Term::iri("http://x/i"), {1, 2}, rng, clusters),
      EmptyNeighborhoodError);
}

TEST_CASE("summary merge group covers every in-group predicate") {
  KnowledgeBase kb = load_kb(data_path("synth500.nt"));
  std::vector<PropertyCluster> clusters = build_property_clusters(
      kb, "http://dbpedia.org/ontology/Person", 0.60);
  REQUIRE(!clusters.empty());
  std::vector<Term> seeds =
      kb.instances_of({"http://dbpedia.org/ontology/Person"});
  Rng rng(17);
  int produced = 0;
  for (const Term& seed : seeds) {
    Subgraph g;
    try {
      g = generate_summary(kb, seed, {1, 5}, rng, clusters);
    } catch (const EmptyNeighborhoodError&) {
      continue;
    }
    ++produced;
    std::set<std::string> in_triples;
    for (const Triple& t : g.triples) in_triples.insert(t.predicate.value);
    for (const std::string& p : g.cluster_properties) {
      CHECK(in_triples.count(p) == 1);
    }
  }
  CHECK(produced > 0);
}

TEST_CASE("seed selection draws distinct seeds, then recycles with a warning") {
  KnowledgeBase kb = load_kb(data_path("cluster.nt"));
  Rng rng(13);
  SeedReport report;
  std::vector<Term> seeds = select_seeds(
      kb, {{"http://example.org/onto/Person"}, 20}, rng, &report);
  REQUIRE(seeds.size() == 20);
  std::set<std::string> uniq;
  for (const Term& s : seeds) uniq.insert(s.value);
  CHECK(uniq.size() == 20);  // pool holds exactly 20 persons
  CHECK(report.warnings.empty());

  Rng rng2(13);
  SeedReport over;
  std::vector<Term> more = select_seeds(
      kb, {{"http://example.org/onto/Person"}, 25}, rng2, &over);
  REQUIRE(more.size() == 25);
  REQUIRE(over.warnings.size() == 1);
  CHECK(over.warnings[0].find("pool") != std::string::npos);

  CHECK_THROWS_AS(select_seeds(kb, {{"http://x/Nothing"}, 1}, rng),
                  NoSeedsError);
}

TEST_CASE("strategy names round trip") {
  for (Strategy s : {Strategy::Star, Strategy::SymmetricStar, Strategy::Path,
                     Strategy::Hybrid, Strategy::Summary}) {
    auto back = strategy_from_name(strategy_name(s));
    REQUIRE(back.has_value());
    CHECK(*back == s);
  }
  CHECK(!strategy_from_name("bogus").has_value());
  CHECK(strategy_name(Strategy::SymmetricStar) == "symstar");
}
