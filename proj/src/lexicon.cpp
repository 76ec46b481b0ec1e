#include "kbtext/lexicon.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "kbtext/errors.hpp"
#include "kbtext/text.hpp"

namespace kbtext {

namespace {

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == '\t') {
      out.emplace_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Lexicon Lexicon::from_tsv(std::string_view text) {
  Lexicon lex;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.empty() || line[0] == '#') {
      if (start > text.size()) break;
      continue;
    }
    std::vector<std::string> cols = split_tabs(line);
    if (cols.size() != 3) {
      throw SyntaxError(line_no, 1, "lexicon line needs 3 tab-separated columns");
    }
    PredicateCategory cat;
    std::string cat_text = trim(cols[2]);
    if (cat_text == "NounPhrase") {
      cat = PredicateCategory::NounPhrase;
    } else if (cat_text == "Verb") {
      cat = PredicateCategory::Verb;
    } else {
      throw SyntaxError(line_no, 1,
                        "lexicon category must be NounPhrase or Verb, got '" +
                            cat_text + "'");
    }
    std::string realization;
    for (const std::string& w : split_whitespace(cols[1])) {
      if (!realization.empty()) realization += ' ';
      realization += w;
    }
    lex.set_entry({expand_curie(trim(cols[0])), realization, cat});
    if (end == text.size()) break;
  }
  return lex;
}

Lexicon Lexicon::from_file(const std::string& path) {
  return from_tsv(read_text_file(path));
}

void Lexicon::set_entry(LexiconEntry entry) {
  std::string key = entry.predicate_iri;
  entries_[key] = std::move(entry);
}

const LexiconEntry* Lexicon::find(std::string_view predicate_iri) const {
  auto it = entries_.find(predicate_iri);
  if (it == entries_.end()) return nullptr;
  return &it->second;
}

LexiconEntry classify_predicate(const KnowledgeBase& kb, const Term& predicate,
                                const Lexicon& lexicon, std::string_view lang) {
  if (const LexiconEntry* e = lexicon.find(predicate.value)) return *e;
  LexiconEntry derived;
  derived.predicate_iri = predicate.value;
  derived.realization = kb.label_of(predicate, lang);
  std::vector<std::string> words = split_whitespace(derived.realization);
  derived.category = (!words.empty() && morph::is_verb_token(words.front()))
                         ? PredicateCategory::Verb
                         : PredicateCategory::NounPhrase;
  return derived;
}

std::vector<std::string> realize_resource(const KnowledgeBase& kb,
                                          const Term& r,
                                          std::string_view lang) {
  return split_whitespace(kb.label_of(r, lang));
}

namespace {

const char* kMonths[12] = {"January",   "February", "March",    "April",
                           "May",       "June",     "July",     "August",
                           "September", "October",  "November", "December"};

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string strip_leading_zeros(std::string_view digits) {
  std::size_t i = 0;
  while (i + 1 < digits.size() && digits[i] == '0') ++i;
  return std::string(digits.substr(i));
}

}  // namespace

std::vector<std::string> realize_literal(const Term& literal,
                                         std::vector<std::string>* warnings) {
  const std::string& lex = literal.value;
  const std::string& dt = literal.datatype_iri;
  auto verbatim = [&] { return split_whitespace(lex); };

  if (dt.empty() || !literal.language_tag.empty() || dt == vocab::kXsdString) {
    return verbatim();
  }
  if (dt == vocab::kXsdDate) {
    // YYYY-MM-DD, month written out, day without leading zero.
    if (lex.size() == 10 && lex[4] == '-' && lex[7] == '-' &&
        all_digits(lex.substr(0, 4)) && all_digits(lex.substr(5, 2)) &&
        all_digits(lex.substr(8, 2))) {
      int month = std::stoi(lex.substr(5, 2));
      int day = std::stoi(lex.substr(8, 2));
      if (month >= 1 && month <= 12 && day >= 1 && day <= 31) {
        return {kMonths[month - 1], std::to_string(day) + ",",
                lex.substr(0, 4)};
      }
    }
    if (warnings) {
      warnings->push_back("malformed xsd:date literal \"" + lex +
                          "\"; using verbatim form");
    }
    return verbatim();
  }
  if (dt == vocab::kXsdInteger) {
    std::string_view digits = lex;
    std::string sign;
    if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
      if (digits[0] == '-') sign = "-";
      digits.remove_prefix(1);
    }
    if (all_digits(digits)) {
      std::string canon = strip_leading_zeros(digits);
      if (canon == "0") sign.clear();
      return {sign + canon};
    }
    if (warnings) {
      warnings->push_back("malformed xsd:integer literal \"" + lex +
                          "\"; using verbatim form");
    }
    return verbatim();
  }
  if (dt == vocab::kXsdDecimal) {
    std::string_view body = lex;
    std::string sign;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
      if (body[0] == '-') sign = "-";
      body.remove_prefix(1);
    }
    std::size_t dot = body.find('.');
    std::string_view int_part = dot == std::string_view::npos ? body : body.substr(0, dot);
    std::string_view frac_part =
        dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
    if ((all_digits(int_part) || int_part.empty()) &&
        (frac_part.empty() || all_digits(frac_part)) &&
        !(int_part.empty() && frac_part.empty())) {
      std::string canon_int =
          int_part.empty() ? "0" : strip_leading_zeros(int_part);
      std::string canon_frac(frac_part);
      while (!canon_frac.empty() && canon_frac.back() == '0') canon_frac.pop_back();
      std::string canon = canon_int;
      if (!canon_frac.empty()) canon += "." + canon_frac;
      if (canon == "0") sign.clear();
      return {sign + canon};
    }
    if (warnings) {
      warnings->push_back("malformed xsd:decimal literal \"" + lex +
                          "\"; using verbatim form");
    }
    return verbatim();
  }
  if (warnings) {
    warnings->push_back("unsupported datatype <" + dt +
                        ">; using verbatim lexical form");
  }
  return verbatim();
}

PronounOptions PronounOptions::defaults() {
  PronounOptions o;
  o.person_class_iris = {
      "http://dbpedia.org/ontology/Person",
      "http://dbpedia.org/ontology/Scientist",
      "http://dbpedia.org/ontology/Artist",
      "http://dbpedia.org/ontology/Athlete",
      "http://dbpedia.org/ontology/Politician",
      "http://dbpedia.org/ontology/Writer",
      "http://dbpedia.org/ontology/Actor",
      "http://dbpedia.org/ontology/MusicalArtist",
      "http://xmlns.com/foaf/0.1/Person",
      "http://schema.org/Person",
  };
  o.gender_property_iris = {
      "http://xmlns.com/foaf/0.1/gender",
      "http://dbpedia.org/ontology/gender",
  };
  return o;
}

namespace {

enum class Gender { Unknown, Male, Female };

// Small given-name table for persons whose KB entry carries no gender
// triple. A miss is fine: the caller falls back to singular they.
Gender gender_from_given_name(std::string_view name_lower) {
  static const std::unordered_set<std::string> kMale = {
      "albert",  "alan",    "alexander", "andrew",  "anthony", "arthur",
      "benjamin","bernard", "carl",      "charles", "daniel",  "david",
      "edmund",  "edward",  "erwin",     "ernest",  "felix",   "francis",
      "frank",   "franz",   "frederick", "george",  "gustav",  "harold",
      "henry",   "hermann", "isaac",     "jack",    "james",   "john",
      "josé",    "joseph",  "karl",      "kurt",    "leonard", "louis",
      "ludwig",  "marcus",  "martin",    "matthew", "max",     "michael",
      "nathan",  "nicholas","niels",     "otto",    "paul",    "peter",
      "philip",  "richard", "robert",    "samuel",  "stephen", "theodore",
      "thomas",  "walter",  "werner",    "william", "wolfgang",
  };
  static const std::unordered_set<std::string> kFemale = {
      "ada",      "agnes",   "alice",    "anna",      "barbara",  "beatrice",
      "caroline", "catherine","charlotte","clara",
      "dorothy",  "edith",   "eleanor",  "elizabeth", "ellen",    "emma",
      "emmy",     "eva",     "florence", "frances",   "grace",    "hannah",
      "helen",    "henrietta","irene",   "irène",     "jane",     "joan",
      "julia",    "katherine","laura",   "lise",      "louise",   "lucy",
      "margaret", "maria",   "marie",    "martha",    "mary",     "mileva",
      "nancy",    "rachel",  "rosalind", "ruth",      "sarah",    "sofia",
      "sophie",   "susan",   "vera",     "victoria",
  };
  std::string key(name_lower);
  if (kMale.count(key) != 0) return Gender::Male;
  if (kFemale.count(key) != 0) return Gender::Female;
  return Gender::Unknown;
}

}  // namespace

PronounInfo pronoun_of(const KnowledgeBase& kb, const Term& r,
                       const PronounOptions& options, std::string_view lang) {
  bool is_person = false;
  for (const std::string& type_iri : kb.types_of(r.value)) {
    for (const std::string& person_class : options.person_class_iris) {
      if (type_iri == person_class) {
        is_person = true;
        break;
      }
    }
    if (is_person) break;
  }
  if (!is_person) return {"it", "its"};

  Gender g = Gender::Unknown;
  for (const std::string& prop : options.gender_property_iris) {
    for (const Triple& t : kb.with_subject(r)) {
      if (t.predicate.value == prop && t.object.is_literal()) {
        std::string v = ascii_lower(t.object.value);
        if (v == "male") g = Gender::Male;
        if (v == "female") g = Gender::Female;
      }
    }
    if (g != Gender::Unknown) break;
  }
  if (g == Gender::Unknown && options.use_given_name_table) {
    std::vector<std::string> words = split_whitespace(kb.label_of(r, lang));
    if (!words.empty()) {
      g = gender_from_given_name(ascii_lower(words.front()));
    }
  }
  switch (g) {
    case Gender::Male: return {"he", "his"};
    case Gender::Female: return {"she", "her"};
    case Gender::Unknown: break;
  }
  return {"they", "their"};
}

SynonymTable SynonymTable::from_tsv(std::string_view text) {
  SynonymTable table;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    bool last = end == text.size();
    start = end + 1;
    ++line_no;
    if (!line.empty() && line[0] != '#') {
      std::vector<std::string> cols = split_tabs(line);
      if (cols.size() != 2) {
        throw SyntaxError(line_no, 1, "synonym line needs 2 tab-separated columns");
      }
      std::vector<std::string> alts;
      std::size_t p = 0;
      const std::string& list = cols[1];
      while (p <= list.size()) {
        std::size_t comma = list.find(',', p);
        if (comma == std::string::npos) comma = list.size();
        std::string alt = trim(std::string_view(list).substr(p, comma - p));
        if (!alt.empty()) alts.push_back(alt);
        p = comma + 1;
      }
      if (!alts.empty()) {
        table.table_[ascii_lower(trim(cols[0]))] = std::move(alts);
      }
    }
    if (last) break;
  }
  return table;
}

SynonymTable SynonymTable::from_file(const std::string& path) {
  return from_tsv(read_text_file(path));
}

const std::vector<std::string>* SynonymTable::find(
    std::string_view word_lower) const {
  auto it = table_.find(word_lower);
  if (it == table_.end()) return nullptr;
  return &it->second;
}

namespace morph {

namespace {

// Closed list of base verbs whose inflections mark a predicate label as
// verbal. Deliberately small; lexicon entries override it.
const std::unordered_set<std::string>& verb_bases() {
  static const std::unordered_set<std::string> kBases = {
      "accept",  "acquire", "author",   "build",   "compose", "conquer",
      "create",  "cross",   "defeat",   "design",  "develop", "direct",
      "discover","edit",    "employ",   "establish","found",  "govern",
      "hold",    "influence","invent",  "know",    "launch",  "lead",
      "locate",  "make",    "manage",   "marry",   "own",     "paint",
      "play",    "produce", "publish",  "record",  "rule",    "serve",
      "sign",    "speak",   "star",     "succeed", "teach",   "train",
      "win",     "write",
  };
  return kBases;
}

const std::map<std::string, std::string>& irregular_participles() {
  static const std::map<std::string, std::string> kIrregular = {
      {"bear", "borne"},   {"build", "built"}, {"hold", "held"},
      {"know", "known"},   {"lead", "led"},    {"make", "made"},
      {"speak", "spoken"}, {"teach", "taught"},{"win", "won"},
      {"write", "written"},
  };
  return kIrregular;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

bool is_verb_token(std::string_view token) {
  std::string t = ascii_lower(token);
  const auto& bases = verb_bases();
  if (bases.count(t) != 0) return true;
  auto check = [&](std::string candidate) { return bases.count(candidate) != 0; };
  if (ends_with(t, "ies") && check(t.substr(0, t.size() - 3) + "y")) return true;
  if (ends_with(t, "ied") && check(t.substr(0, t.size() - 3) + "y")) return true;
  if (ends_with(t, "es") && check(t.substr(0, t.size() - 2))) return true;
  if (ends_with(t, "ed") && check(t.substr(0, t.size() - 2))) return true;
  if (ends_with(t, "s") && check(t.substr(0, t.size() - 1))) return true;
  if (ends_with(t, "d") && check(t.substr(0, t.size() - 1))) return true;
  return false;
}

std::string verb_base_from_3sg(std::string_view surface) {
  std::string s = ascii_lower(surface);
  const auto& bases = verb_bases();
  if (ends_with(s, "ies")) {
    std::string c = s.substr(0, s.size() - 3) + "y";
    if (bases.count(c) != 0) return c;
  }
  if (ends_with(s, "es")) {
    std::string c = s.substr(0, s.size() - 2);
    if (bases.count(c) != 0) return c;
  }
  if (ends_with(s, "s")) {
    std::string c = s.substr(0, s.size() - 1);
    if (bases.count(c) != 0) return c;
  }
  if (bases.count(s) != 0) return s;
  // Unknown verb: generic suffix stripping.
  if (ends_with(s, "ies")) return s.substr(0, s.size() - 3) + "y";
  if (ends_with(s, "sses") || ends_with(s, "shes") || ends_with(s, "ches") ||
      ends_with(s, "xes") || ends_with(s, "zes") || ends_with(s, "oes")) {
    return s.substr(0, s.size() - 2);
  }
  if (ends_with(s, "s") && !ends_with(s, "ss")) return s.substr(0, s.size() - 1);
  return s;
}

std::string past_participle(std::string_view surface) {
  std::string s = ascii_lower(surface);
  // Already past/participle shaped: keep it.
  if (ends_with(s, "ed")) return s;
  std::string base = verb_base_from_3sg(s);
  const auto& irregular = irregular_participles();
  auto it = irregular.find(base);
  if (it != irregular.end()) return it->second;
  if (ends_with(base, "e")) return base + "d";
  if (base.size() >= 2 && base.back() == 'y' &&
      std::string("aeiou").find(base[base.size() - 2]) == std::string::npos) {
    return base.substr(0, base.size() - 1) + "ied";
  }
  return base + "ed";
}

std::string be_for(std::string_view surface) {
  std::string s = ascii_lower(surface);
  if (ends_with(s, "s") && !ends_with(s, "ss")) return "is";
  return "was";
}

bool is_be_form(std::string_view word) {
  std::string w = ascii_lower(word);
  return w == "is" || w == "are" || w == "was" || w == "were" || w == "be" ||
         w == "been" || w == "being";
}

}  // namespace morph

}  // namespace kbtext
