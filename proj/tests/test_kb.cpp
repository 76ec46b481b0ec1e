#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "kbtext/errors.hpp"
#include "kbtext/kb.hpp"
#include "test_support.hpp"

using namespace kbtext;

namespace {
const char* kSmall =
    "<http://x/s> <http://x/p> <http://x/o> .\n"
    "# a comment\n"
    "\n"
    "<http://x/s> <http://x/p> \"plain\" .\n"
    "<http://x/s> <http://x/p> \"tagged\"@EN-US .\n"
    "<http://x/s> <http://x/p> \"42\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
    "_:b1 <http://x/p> <http://x/o> .\n"
    "<http://x/s> <http://x/p> _:b1 .\n";
}

TEST_CASE("parse_ntriples handles all term kinds") {
  KnowledgeBase kb = parse_ntriples(kSmall);
  REQUIRE(kb.size() == 6);
  CHECK(kb.triples()[0].object.is_iri());
  CHECK(kb.triples()[1].object.is_literal());
  CHECK(kb.triples()[1].object.datatype_iri.empty());
  CHECK(kb.triples()[2].object.language_tag == "en-us");  // lowered
  CHECK(kb.triples()[3].object.datatype_iri ==
        "http://www.w3.org/2001/XMLSchema#integer");
  CHECK(kb.triples()[4].subject.is_blank());
  CHECK(kb.triples()[4].subject.value == "b1");
  CHECK(kb.triples()[5].object.is_blank());
}

TEST_CASE("duplicate statements collapse, order is first seen") {
  KnowledgeBase kb = parse_ntriples(
      "<http://x/b> <http://x/p> <http://x/o> .\n"
      "<http://x/a> <http://x/p> <http://x/o> .\n"
      "<http://x/b> <http://x/p> <http://x/o> .\n");
  REQUIRE(kb.size() == 2);
  CHECK(kb.triples()[0].subject.value == "http://x/b");
  CHECK(kb.triples()[1].subject.value == "http://x/a");
}

TEST_CASE("string escapes and \\u sequences decode") {
  KnowledgeBase kb = parse_ntriples(
      "<http://x/s> <http://x/p> \"a\\\"b\\nc\\\\d\\td\" .\n"
      "<http://x/s> <http://x/q> \"M\\u00FCnchen\" .\n"
      "<http://x/s> <http://x/r> \"\\U0001F600\" .\n");
  CHECK(kb.triples()[0].object.value == "a\"b\nc\\d\td");
  CHECK(kb.triples()[1].object.value == "M\xc3\xbcnchen");
  CHECK(kb.triples()[2].object.value == "\xf0\x9f\x98\x80");
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_ntriples(
        "<http://x/s> <http://x/p> <http://x/o> .\n"
        "<http://x/s> nonsense .\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 1);
  }
  CHECK_THROWS_AS(parse_ntriples("<http://x/s> <http://x/p> \"open .\n"),
                  SyntaxError);
  // literal in subject position
  CHECK_THROWS_AS(parse_ntriples("\"lit\" <http://x/p> <http://x/o> .\n"),
                  SyntaxError);
}

TEST_CASE("lenient mode skips bad lines and reports them") {
  ParseOptions opt;
  opt.lenient = true;
  ParseReport report;
  KnowledgeBase kb = parse_ntriples(
      "<http://x/s> <http://x/p> <http://x/o> .\n"
      "garbage here\n"
      "<http://x/s2> <http://x/p> <http://x/o> .\n",
      opt, &report);
  CHECK(kb.size() == 2);
  REQUIRE(report.warnings.size() == 1);
  CHECK(report.warnings[0].find("line 2") != std::string::npos);
}

TEST_CASE("label lookup and fallbacks") {
  KnowledgeBase kb = parse_ntriples(
      "<http://x/r> <http://www.w3.org/2000/01/rdf-schema#label> \"Haus\"@de .\n"
      "<http://x/r> <http://www.w3.org/2000/01/rdf-schema#label> \"House\"@en .\n"
      "<http://x/bare> <http://x/p> <http://x/r> .\n");
  const std::vector<Label>* labels = kb.labels("http://x/r");
  REQUIRE(labels != nullptr);
  CHECK(labels->size() == 2);
  CHECK(kb.labels("http://x/none") == nullptr);

  CHECK(kb.label_of(Term::iri("http://x/r"), "en") == "House");
  CHECK(kb.label_of(Term::iri("http://x/r"), "fr") == "Haus");  // any label
  // no label at all: local name, camelCase split and underscores spaced
  CHECK(kb.label_of(Term::iri("http://x/birthPlace")) == "birth place");
  CHECK(kb.label_of(Term::iri("http://x/Alabama_River")) == "Alabama River");
}

TEST_CASE("local_name_words") {
  CHECK(local_name_words("http://dbpedia.org/ontology/birthPlace") ==
        "birth place");
  CHECK(local_name_words("http://dbpedia.org/resource/Alabama_River") ==
        "Alabama River");
  CHECK(local_name_words("http://x/ns#deathPlace") == "death place");
  CHECK(local_name_words("http://x/plain") == "plain");
}

TEST_CASE("instance and type indexes") {
  KnowledgeBase kb = load_kb(data_path("einstein.nt"));
  REQUIRE(kb.size() == 6);
  std::vector<Term> sci =
      kb.instances_of({"http://dbpedia.org/ontology/Scientist"});
  REQUIRE(sci.size() == 1);
  CHECK(sci[0].value == "http://dbpedia.org/resource/Albert_Einstein");
  CHECK(kb.has_type("http://dbpedia.org/resource/Albert_Einstein",
                    "http://dbpedia.org/ontology/Scientist"));
  CHECK(!kb.has_type("http://dbpedia.org/resource/Ulm",
                     "http://dbpedia.org/ontology/Scientist"));
  CHECK(kb.types_of("http://dbpedia.org/resource/Albert_Einstein") ==
        std::vector<std::string>{"http://dbpedia.org/ontology/Scientist"});

  // sorted, deduplicated, multi class
  KnowledgeBase kb2 = parse_ntriples(
      "<http://x/b> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://x/T> .\n"
      "<http://x/a> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://x/T> .\n"
      "<http://x/a> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://x/U> .\n");
  std::vector<Term> both = kb2.instances_of({"http://x/T", "http://x/U"});
  REQUIRE(both.size() == 2);
  CHECK(both[0].value == "http://x/a");
  CHECK(both[1].value == "http://x/b");
}

TEST_CASE("subject and object indexes") {
  KnowledgeBase kb = load_kb(data_path("einstein.nt"));
  Term albert = Term::iri("http://dbpedia.org/resource/Albert_Einstein");
  CHECK(kb.with_subject(albert).size() == 5);
  Term ulm = Term::iri("http://dbpedia.org/resource/Ulm");
  CHECK(kb.with_object(ulm).size() == 1);
  CHECK(kb.with_subject(Term::iri("http://x/none")).empty());
}

TEST_CASE("serialize round trips") {
  KnowledgeBase kb = parse_ntriples(kSmall);
  std::ostringstream out;
  kb.serialize(out);
  KnowledgeBase again = parse_ntriples(out.str());
  REQUIRE(again.size() == kb.size());
  for (std::size_t i = 0; i < kb.size(); ++i)
    CHECK(again.triples()[i] == kb.triples()[i]);
}

TEST_CASE("load_kb reads gzip") {
  KnowledgeBase plain = load_kb(data_path("mini.nt"));
  KnowledgeBase gz = load_kb(data_path("mini.nt.gz"));
  REQUIRE(gz.size() == plain.size());
  for (std::size_t i = 0; i < gz.size(); ++i)
    CHECK(gz.triples()[i] == plain.triples()[i]);
  CHECK_THROWS_AS((void)load_kb(data_path("missing.nt")), IoError);
}

TEST_CASE("expand_curie") {
  CHECK(expand_curie("dbo:birthPlace") ==
        "http://dbpedia.org/ontology/birthPlace");
  CHECK(expand_curie("rdfs:label") ==
        "http://www.w3.org/2000/01/rdf-schema#label");
  CHECK(expand_curie("http://x/full") == "http://x/full");
}

TEST_CASE("term identity keys") {
  CHECK(Term::iri("http://x/a").ntriples() == "<http://x/a>");
  CHECK(Term::literal("a\"b").ntriples() == "\"a\\\"b\"");
  CHECK(Term::literal("x", "", "en").ntriples() == "\"x\"@en");
  CHECK(Term::literal("1", "http://x/int").ntriples() ==
        "\"1\"^^<http://x/int>");
  CHECK(Term::blank("b1").ntriples() == "_:b1");
}
