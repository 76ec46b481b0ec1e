#include <string>
#include <vector>

#include "doctest.h"
#include "kbtext/errors.hpp"
#include "kbtext/kb.hpp"
#include "kbtext/lexicon.hpp"
#include "kbtext/realizer.hpp"
#include "kbtext/subgraph.hpp"
#include "kbtext/text.hpp"
#include "test_support.hpp"

using namespace kbtext;

namespace {

Term albert() { return Term::iri("http://dbpedia.org/resource/Albert_Einstein"); }

Triple triple_of(const KnowledgeBase& kb, const std::string& pred) {
  for (const Triple& t : kb.triples()) {
    if (t.predicate.value == pred) return t;
  }
  throw std::runtime_error("fixture is missing predicate " + pred);
}

void check_spans(const RealizedSentence& s) {
  for (const SpanAnnotation& span : s.spans) {
    CHECK(span.begin < span.end);
    CHECK(span.end <= cp_length(s.text));
    CHECK(span.anchor == cp_substr(s.text, span.begin, span.end));
    CHECK(!span.resource_iri.empty());
  }
}

}  // namespace

TEST_CASE("noun-phrase predicate: possessive copula with exact spans") {
  KnowledgeBase kb = load_kb(data_path("einstein.nt"));
  Lexicon lex;
  Triple bp = triple_of(kb, "http://dbpedia.org/ontology/birthPlace");
  RealizedSentence s = linearize_spec(plan_triple(kb, bp, lex), {bp});
  CHECK(s.text == "Albert Einstein's birth place is Ulm.");
  REQUIRE(s.spans.size() == 2);
  CHECK(s.spans[0].begin == 0);
  CHECK(s.spans[0].end == 15);
  CHECK(s.spans[0].resource_iri == albert().value);
  CHECK(s.spans[0].anchor == "Albert Einstein");
  CHECK(s.spans[1].begin == 33);
  CHECK(s.spans[1].end == 36);
  CHECK(s.spans[1].resource_iri == "http://dbpedia.org/resource/Ulm");
  CHECK(s.spans[1].anchor == "Ulm");
  CHECK(!s.is_type_sentence);
  check_spans(s);
}

TEST_CASE("verbal predicate from an explicit lexicon entry") {
  KnowledgeBase kb = load_kb(data_path("einstein.nt"));
  Lexicon lex;
  lex.set_entry({"http://dbpedia.org/ontology/birthPlace", "was born in",
                 PredicateCategory::Verb});
  Triple bp = triple_of(kb, "http://dbpedia.org/ontology/birthPlace");
  RealizedSentence s = linearize_spec(plan_triple(kb, bp, lex), {bp});
  CHECK(s.text == "Albert Einstein was born in Ulm.");
  REQUIRE(s.spans.size() == 2);
  CHECK(s.spans[0].begin == 0);
  CHECK(s.spans[0].end == 15);
  CHECK(s.spans[1].begin == 28);
  CHECK(s.spans[1].end == 31);
  CHECK(s.spans[1].anchor == "Ulm");
  check_spans(s);
}

TEST_CASE("rdf:type becomes an unannotated class predication") {
  KnowledgeBase kb = load_kb(data_path("einstein.nt"));
  Lexicon lex;
  Triple ty = triple_of(kb, "http://www.w3.org/1999/02/22-rdf-syntax-ns#type");
  RealizedSentence s = linearize_spec(plan_triple(kb, ty, lex), {ty});
  CHECK(s.text == "Albert Einstein is a scientist.");
  CHECK(s.is_type_sentence);
  REQUIRE(s.spans.size() == 1);  // only the subject is a mention
  CHECK(s.spans[0].resource_iri == albert().value);

  // vowel-initial class takes "an"
  KnowledgeBase kb2 = parse_ntriples(
      "<http://x/p> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://x/Engineer> .\n"
      "<http://x/p> <http://www.w3.org/2000/01/rdf-schema#label> \"Pat Doe\"@en .\n");
  Triple ty2 = triple_of(kb2, "http://www.w3.org/1999/02/22-rdf-syntax-ns#type");
  RealizedSentence s2 = linearize_spec(plan_triple(kb2, ty2, lex), {ty2});
  CHECK(s2.text == "Pat Doe is an engineer.");
}

TEST_CASE("date literals render as prose") {
  KnowledgeBase kb = load_kb(data_path("pettus.nt"));
  Lexicon lex = Lexicon::from_tsv(
      "dbp:declared\twas declared a National Historic Landmark on\tVerb\n");
  Triple decl = triple_of(kb, "http://dbpedia.org/property/declared");
  RealizedSentence s = linearize_spec(plan_triple(kb, decl, lex), {decl});
  CHECK(s.text ==
        "Edmund Pettus Bridge was declared a National Historic Landmark on "
        "March 11, 2013.");
  REQUIRE(s.spans.size() == 1);  // literals carry no annotation
  CHECK(s.spans[0].anchor == "Edmund Pettus Bridge");
  check_spans(s);
}

TEST_CASE("document realization pronominalizes repeated seed subjects") {
  KnowledgeBase kb = load_kb(data_path("einstein.nt"));
  Lexicon lex;
  Subgraph g;
  g.seed = albert();
  g.strategy = Strategy::Star;
  g.triples = {triple_of(kb, "http://dbpedia.org/ontology/birthPlace"),
               triple_of(kb, "http://dbpedia.org/ontology/deathPlace")};
  std::vector<RealizedSentence> out = realize_document(kb, g, lex);
  REQUIRE(out.size() == 2);
  CHECK(out[0].text == "Albert Einstein's birth place is Ulm.");
  CHECK(out[1].text == "His death place is Princeton.");
  // the pronoun still refers to the seed and stays an annotated mention
  REQUIRE(out[1].spans.size() == 2);
  CHECK(out[1].spans[0].begin == 0);
  CHECK(out[1].spans[0].end == 3);
  CHECK(out[1].spans[0].anchor == "His");
  CHECK(out[1].spans[0].resource_iri == albert().value);
  check_spans(out[0]);
  check_spans(out[1]);
}

TEST_CASE("a break in the subject run restores the full name") {
  KnowledgeBase kb = load_kb(data_path("einstein.nt"));
  Lexicon lex;
  Subgraph g;
  g.seed = albert();
  g.strategy = Strategy::Path;
  // Albert, then Ulm, then Albert again: the third sentence must not use a
  // pronoun because the second broke the run.
  g.triples = {triple_of(kb, "http://dbpedia.org/ontology/birthPlace"),
               triple_of(kb, "http://dbpedia.org/ontology/country"),
               triple_of(kb, "http://dbpedia.org/ontology/deathPlace")};
  std::vector<RealizedSentence> out = realize_document(kb, g, lex);
  REQUIRE(out.size() == 3);
  CHECK(out[0].text == "Albert Einstein's birth place is Ulm.");
  CHECK(out[1].text == "Ulm's country is Germany.");
  CHECK(out[2].text == "Albert Einstein's death place is Princeton.");
}

TEST_CASE("merged sentence joins cluster triples with a pronoun") {
  KnowledgeBase kb = load_kb(data_path("einstein.nt"));
  Lexicon lex;
  Subgraph g;
  g.seed = albert();
  g.strategy = Strategy::Summary;
  g.triples = {triple_of(kb, "http://dbpedia.org/ontology/birthPlace"),
               triple_of(kb, "http://dbpedia.org/ontology/deathPlace")};
  g.cluster_properties = {"http://dbpedia.org/ontology/birthPlace",
                          "http://dbpedia.org/ontology/deathPlace"};
  std::vector<RealizedSentence> out = realize_document(kb, g, lex);
  REQUIRE(out.size() == 1);
  const RealizedSentence& s = out[0];
  CHECK(s.text ==
        "Albert Einstein's birth place is Ulm and his death place is "
        "Princeton.");
  REQUIRE(s.spans.size() == 4);
  CHECK(s.spans[0].anchor == "Albert Einstein");
  CHECK(s.spans[1].anchor == "Ulm");
  CHECK(s.spans[2].anchor == "his");
  CHECK(s.spans[2].resource_iri == albert().value);
  CHECK(s.spans[3].anchor == "Princeton");
  check_spans(s);
}

TEST_CASE("merge refuses mixed subjects") {
  KnowledgeBase kb = load_kb(data_path("einstein.nt"));
  Lexicon lex;
  std::vector<PhraseSpec> specs;
  specs.push_back(plan_triple(
      kb, triple_of(kb, "http://dbpedia.org/ontology/birthPlace"), lex));
  specs.push_back(plan_triple(
      kb, triple_of(kb, "http://dbpedia.org/ontology/country"), lex));
  CHECK_THROWS_AS(merge_cluster_sentences(std::move(specs), {"he", "his"}),
                  MixedSubjectsError);
}

TEST_CASE("pronoun agreement for singular they") {
  KnowledgeBase kb = parse_ntriples(
      "<http://x/p> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://dbpedia.org/ontology/Person> .\n"
      "<http://x/p> <http://www.w3.org/2000/01/rdf-schema#label> \"Zyx Moor\"@en .\n"
      "<http://x/p> <http://x/birthPlace> <http://x/Ulm> .\n"
      "<http://x/p> <http://x/deathPlace> <http://x/Bern> .\n");
  Lexicon lex;
  lex.set_entry({"http://x/birthPlace", "was born in", PredicateCategory::Verb});
  lex.set_entry({"http://x/deathPlace", "died in", PredicateCategory::Verb});
  Subgraph g;
  g.seed = Term::iri("http://x/p");
  g.strategy = Strategy::Star;
  g.triples = {triple_of(kb, "http://x/birthPlace"),
               triple_of(kb, "http://x/deathPlace")};
  std::vector<RealizedSentence> out = realize_document(kb, g, lex);
  REQUIRE(out.size() == 2);
  CHECK(out[0].text == "Zyx Moor was born in Ulm.");
  CHECK(out[1].text == "They died in Bern.");
}

TEST_CASE("spans count scalar values, not bytes") {
  KnowledgeBase kb = parse_ntriples(
      "<http://x/jose> <http://www.w3.org/2000/01/rdf-schema#label> \"Jos\\u00E9 Garc\\u00EDa\"@en .\n"
      "<http://x/jose> <http://x/birthPlace> <http://x/zurich> .\n"
      "<http://x/zurich> <http://www.w3.org/2000/01/rdf-schema#label> \"Z\\u00FCrich\"@en .\n");
  Lexicon lex;
  Triple bp = triple_of(kb, "http://x/birthPlace");
  RealizedSentence s = linearize_spec(plan_triple(kb, bp, lex), {bp});
  CHECK(s.text == "Jos\xc3\xa9 Garc\xc3\xad" "a's birth place is Z\xc3\xbcrich.");
  REQUIRE(s.spans.size() == 2);
  CHECK(s.spans[0].begin == 0);
  CHECK(s.spans[0].end == 11);  // José García
  CHECK(s.spans[1].begin == 29);
  CHECK(s.spans[1].end == 35);  // Zürich
  check_spans(s);
}

TEST_CASE("four-sentence landmark document") {
  KnowledgeBase kb = load_kb(data_path("pettus.nt"));
  Lexicon lex = Lexicon::from_tsv(
      "dbp:declared\twas declared a National Historic Landmark on\tVerb\n");
  Subgraph g;
  g.seed = Term::iri("http://dbpedia.org/resource/Edmund_Pettus_Bridge");
  g.strategy = Strategy::Star;
  g.triples = {
      triple_of(kb, "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"),
      triple_of(kb, "http://dbpedia.org/ontology/crosses"),
      triple_of(kb, "http://dbpedia.org/property/type"),
      triple_of(kb, "http://dbpedia.org/property/declared"),
  };
  std::vector<RealizedSentence> out = realize_document(kb, g, lex);
  REQUIRE(out.size() == 4);
  CHECK(out[0].text == "Edmund Pettus Bridge is a bridge.");
  CHECK(out[1].text == "It crosses Alabama River.");
  CHECK(out[2].text == "Its type is Through arch bridge.");
  CHECK(out[3].text ==
        "It was declared a National Historic Landmark on March 11, 2013.");
  for (const RealizedSentence& s : out) check_spans(s);
  // every pronoun keeps pointing at the bridge
  CHECK(out[1].spans[0].resource_iri == g.seed.value);
  CHECK(out[2].spans[0].resource_iri == g.seed.value);
  CHECK(out[3].spans[0].resource_iri == g.seed.value);
}
