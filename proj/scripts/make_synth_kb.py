#!/usr/bin/env python3
"""Builds the bundled 500-triple synthetic KB used by the test suite.

Regenerate with:  python3 scripts/make_synth_kb.py tests/data/synth500.nt
The output is deterministic for a fixed seed, so the committed file and a
fresh run agree byte for byte.
"""
import random
import sys

ONTO = "http://example.org/onto/"
RES = "http://example.org/res/"
DBO = "http://dbpedia.org/ontology/"
RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"
RDFS_LABEL = "http://www.w3.org/2000/01/rdf-schema#label"
FOAF_GENDER = "http://xmlns.com/foaf/0.1/gender"
XSD = "http://www.w3.org/2001/XMLSchema#"

MALE = ["Albert", "Niels", "Erwin", "Max", "Paul", "Werner", "Otto", "Louis",
        "James", "Peter", "Karl", "Wolfgang", "José", "Richard", "Henry"]
FEMALE = ["Marie", "Lise", "Emmy", "Clara", "Sofia", "Ada", "Irène", "Eva",
          "Hannah", "Grace"]
# Names the pronoun table does not know; these fall back to singular they.
NEUTRAL = ["Łukasz", "Kim", "Ariel", "Noor", "Sasha"]
SURNAMES = ["Keller", "Navarro", "Okafor", "Lindgren", "Takahashi", "Müller",
            "Santos", "Novak", "Haddad", "Berg", "Fontaine", "Idowu"]

PLACES = ["Ulm", "Vienna", "Kraków", "Lyon", "Porto", "Uppsala", "Graz",
          "Leiden", "Turin", "Bern", "München", "Łódź", "Nancy", "Zürich",
          "Ghent"]
COUNTRIES = ["Germany", "Austria", "Poland", "France", "Portugal"]
TOPICS = ["physicist", "chemist", "mathematician", "engineer", "astronomer",
          "biologist"]


def iri(x):
    return f"<{x}>"


def res(local):
    return iri(RES + local)


def lit(value, lang=None, datatype=None):
    out = '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if lang:
        out += f"@{lang}"
    elif datatype:
        out += f"^^<{XSD}{datatype}>"
    return out


def main():
    out_path = sys.argv[1] if len(sys.argv) > 1 else "tests/data/synth500.nt"
    rng = random.Random(20260817)
    triples = []

    def add(s, p, o):
        triples.append(f"{s} {iri(p)} {o} .")

    countries = []
    for name in COUNTRIES:
        c = res("country_" + name)
        countries.append(c)
        add(c, RDF_TYPE, iri(DBO + "Country"))
        add(c, RDFS_LABEL, lit(name, lang="en"))

    places = []
    for name in PLACES:
        local = (name.replace("ü", "ue").replace("ó", "o").replace("Ł", "L")
                     .replace("ö", "oe").replace("ü", "ue"))
        p = res("place_" + local)
        places.append(p)
        add(p, RDF_TYPE, iri(DBO + "Place"))
        add(p, RDFS_LABEL, lit(name, lang="en"))
        add(p, DBO + "country", rng.choice(countries))

    topics = []
    for name in TOPICS:
        t = res("topic_" + name)
        topics.append(t)
        add(t, RDFS_LABEL, lit(name, lang="en"))

    awards = []
    for name in ["Copley Medal", "Fields Medal", "Turing Award",
                 "Nobel Prize in Physics", "Wolf Prize", "Abel Prize"]:
        a = res("award_" + name.split()[0])
        awards.append(a)
        add(a, RDFS_LABEL, lit(name, lang="en"))

    persons = []
    person_names = []
    pool = ([(n, "male") for n in MALE] + [(n, "female") for n in FEMALE] +
            [(n, None) for n in NEUTRAL])
    rng.shuffle(pool)
    for i, (given, gender) in enumerate(pool[:30] + pool[:10]):
        surname = SURNAMES[i % len(SURNAMES)]
        local = f"person{i:02d}"
        p = res(local)
        persons.append(p)
        full = f"{given} {surname}"
        person_names.append(full)
        add(p, RDF_TYPE, iri(DBO + "Person"))
        add(p, RDFS_LABEL, lit(full, lang="en"))
        # A short alternative label for roughly a third of the people.
        if rng.random() < 0.34:
            add(p, RDFS_LABEL, lit(surname, lang="en"))
        if gender and rng.random() < 0.7:
            add(p, FOAF_GENDER, lit(gender, lang="en"))
        # birthPlace coverage 1.0, deathPlace ~0.8, occupation ~0.75.
        add(p, DBO + "birthPlace", rng.choice(places))
        if rng.random() < 0.8:
            add(p, DBO + "deathPlace", rng.choice(places))
        if rng.random() < 0.75:
            add(p, DBO + "occupation", rng.choice(topics))
        if rng.random() < 0.5:
            y, m, d = rng.randint(1820, 1980), rng.randint(1, 12), rng.randint(1, 28)
            add(p, DBO + "birthDate", lit(f"{y:04d}-{m:02d}-{d:02d}",
                                          datatype="date"))
        if rng.random() < 0.55:
            add(p, DBO + "award", rng.choice(awards))
        if rng.random() < 0.5:
            add(p, DBO + "residence", rng.choice(places))
        if rng.random() < 0.4:
            add(p, DBO + "field", rng.choice(topics))

    # Person-to-person edges keep walks alive; knows coverage ~0.9.
    for i, p in enumerate(persons):
        if rng.random() < 0.9:
            add(p, DBO + "knows", persons[(i + rng.randint(1, len(persons) - 1))
                                          % len(persons)])
        if rng.random() < 0.35:
            add(p, DBO + "spouse", persons[(i + rng.randint(1, len(persons) - 1))
                                           % len(persons)])
        if rng.random() < 0.5:
            add(p, DBO + "influenced", persons[(i + rng.randint(1, len(persons) - 1))
                                               % len(persons)])

    # Blank nodes must be ignored by every sampling strategy.
    add("_:b0", DBO + "knows", persons[0])
    add(persons[1], DBO + "note", "_:b1")
    add("_:b2", RDF_TYPE, iri(DBO + "Person"))

    # Pad with unobtrusive numeric facts to land on exactly 500 statements.
    fill = 0
    while len(triples) < 500:
        target = places[fill % len(places)]
        add(target, DBO + "populationTotal",
            lit(str(10000 + 137 * fill), datatype="integer"))
        fill += 1
    del triples[500:]
    assert len(triples) == 500, len(triples)

    with open(out_path, "w", encoding="utf-8") as f:
        f.write("\n".join(triples) + "\n")
    print(f"wrote {len(triples)} triples to {out_path}")


if __name__ == "__main__":
    main()
