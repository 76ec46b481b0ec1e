#include "kbtext/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <utility>

#include "kbtext/errors.hpp"
#include "kbtext/paraphrase.hpp"
#include "kbtext/rng.hpp"
#include "kbtext/seeds.hpp"
#include "kbtext/text.hpp"

namespace kbtext {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

std::size_t parse_size(const std::string& value, int line) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(value, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != value.size() || value.empty() || value[0] == '-') {
    throw Error("config line " + std::to_string(line) +
                ": expected a non-negative integer, got '" + value + "'");
  }
  return static_cast<std::size_t>(v);
}

uint64_t parse_u64(const std::string& value, int line) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(value, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != value.size() || value.empty() || value[0] == '-') {
    throw Error("config line " + std::to_string(line) +
                ": expected an unsigned integer, got '" + value + "'");
  }
  return static_cast<uint64_t>(v);
}

bool parse_bool(const std::string& value, int line) {
  std::string v = ascii_lower(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw Error("config line " + std::to_string(line) +
              ": expected a boolean, got '" + value + "'");
}

void validate_config(const GenerationConfig& config) {
  if (config.document_count < 1) throw Error("document count must be at least 1");
  if (config.bounds.d_min < 1) throw Error("dmin must be at least 1");
  if (config.bounds.d_min > config.bounds.d_max) {
    throw Error("dmin " + std::to_string(config.bounds.d_min) +
                " exceeds dmax " + std::to_string(config.bounds.d_max));
  }
  if (!(config.coverage_threshold > 0.0 && config.coverage_threshold <= 1.0)) {
    throw Error("coverage threshold must lie in (0, 1]");
  }
  if (config.class_iris.empty()) throw Error("at least one seed class is required");
}

}  // namespace

std::vector<std::string> split_class_list(std::string_view csv) {
  std::string value{csv};
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t comma = value.find(',', start);
    std::string item = trim(value.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start));
    if (!item.empty()) out.push_back(expand_curie(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string document_id(std::size_t index, std::size_t count) {
  std::size_t last = count ? count - 1 : 0;
  std::size_t width = 1;
  while (last >= 10) {
    last /= 10;
    ++width;
  }
  std::string digits = std::to_string(index);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return digits;
}

GenerationConfig parse_config(std::string_view text, GenerationConfig base) {
  GenerationConfig cfg = std::move(base);
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string entry = trim(raw);
    if (entry.empty() || entry[0] == '#') continue;
    std::size_t eq = entry.find('=');
    if (eq == std::string::npos) {
      throw Error("config line " + std::to_string(line) + ": expected key=value");
    }
    std::string key = trim(entry.substr(0, eq));
    std::string value = trim(entry.substr(eq + 1));
    if (key == "kb") {
      cfg.kb_path = value;
    } else if (key == "classes") {
      cfg.class_iris = split_class_list(value);
    } else if (key == "strategy") {
      auto s = strategy_from_name(value);
      if (!s) {
        throw Error("config line " + std::to_string(line) +
                    ": unknown strategy '" + value + "'");
      }
      cfg.strategy = *s;
    } else if (key == "docs") {
      cfg.document_count = parse_size(value, line);
    } else if (key == "dmin") {
      cfg.bounds.d_min = parse_size(value, line);
    } else if (key == "dmax") {
      cfg.bounds.d_max = parse_size(value, line);
    } else if (key == "paraphrase") {
      cfg.paraphrase = parse_bool(value, line);
    } else if (key == "seed") {
      cfg.master_seed = parse_u64(value, line);
    } else if (key == "language") {
      cfg.language = value;
    } else if (key == "coverage-threshold" || key == "coverage_threshold") {
      try {
        std::size_t pos = 0;
        cfg.coverage_threshold = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw Error("config line " + std::to_string(line) +
                    ": expected a number, got '" + value + "'");
      }
    } else if (key == "lexicon") {
      cfg.lexicon_path = value;
    } else if (key == "synonyms") {
      cfg.synonym_path = value;
    } else if (key == "jobs") {
      cfg.jobs = parse_size(value, line);
    } else {
      throw Error("config line " + std::to_string(line) + ": unknown key '" +
                  key + "'");
    }
  }
  return cfg;
}

GenerationConfig load_config_file(const std::string& path,
                                  GenerationConfig base) {
  return parse_config(read_text_file(path), std::move(base));
}

Corpus generate_corpus(const KnowledgeBase& kb, const GenerationConfig& config,
                       const Lexicon& lexicon, const SynonymTable& synonyms) {
  validate_config(config);

  Corpus corpus;
  corpus.config = config;
#ifdef KBTEXT_VERSION
  corpus.generator_version = KBTEXT_VERSION;
#else
  corpus.generator_version = "0.0.0";
#endif

  const std::size_t n = config.document_count;
  SeedReport seed_report;
  Rng seeds_rng(Rng::derive(config.master_seed, 0, Rng::kSaltSeeds));
  std::vector<Term> assigned =
      select_seeds(kb, SeedSpec{config.class_iris, n}, seeds_rng, &seed_report);
  corpus.warnings = seed_report.warnings;
  const std::vector<Term> pool = kb.instances_of(config.class_iris);

  // Shared read-only inputs for the workers.
  std::map<std::string, std::vector<PropertyCluster>> clusters_by_class;
  if (config.strategy == Strategy::Summary) {
    for (const std::string& c : config.class_iris) {
      if (!clusters_by_class.count(c)) {
        clusters_by_class.emplace(
            c, build_property_clusters(kb, c, config.coverage_threshold));
      }
    }
  }
  auto clusters_for = [&](const Term& seed) -> const std::vector<PropertyCluster>& {
    for (const std::string& c : config.class_iris) {
      if (kb.has_type(seed.value, c)) return clusters_by_class.at(c);
    }
    return clusters_by_class.at(config.class_iris.front());
  };

  auto sample = [&](const Term& seed, Rng& gen) -> Subgraph {
    switch (config.strategy) {
      case Strategy::Star:
        return generate_star(kb, seed, config.bounds, gen);
      case Strategy::SymmetricStar:
        return generate_symmetric_star(kb, seed, config.bounds, gen);
      case Strategy::Path:
        return generate_path(kb, seed, config.bounds, gen);
      case Strategy::Hybrid:
        return generate_hybrid(kb, seed, config.bounds, gen);
      case Strategy::Summary:
        return generate_summary(kb, seed, config.bounds, gen, clusters_for(seed));
    }
    throw Error("unknown strategy");
  };

  constexpr std::size_t kExtraAttempts = 100;
  auto build_one = [&](std::size_t index,
                       std::vector<std::string>& slot_warnings) -> Document {
    Rng gen(Rng::derive(config.master_seed, index, Rng::kSaltGenerate));
    Rng para(Rng::derive(config.master_seed, index, Rng::kSaltParaphrase));
    const std::string id = document_id(index, n);
    Term seed = assigned[index];
    for (std::size_t attempt = 0; attempt <= kExtraAttempts; ++attempt) {
      try {
        Subgraph sg = sample(seed, gen);
        RealizerOptions options;
        options.language = config.language;
        std::vector<std::string> realizer_warnings;
        std::vector<RealizedSentence> sentences =
            realize_document(kb, sg, lexicon, options, &realizer_warnings);
        if (config.paraphrase) {
          for (RealizedSentence& s : sentences) {
            s = paraphrase_sentence(s, kb, synonyms, para, config.language);
          }
        }
        Document doc;
        doc.id = id;
        doc.truncated = sg.truncated;
        std::size_t cp = 0;  // scalar values laid down so far
        for (std::size_t si = 0; si < sentences.size(); ++si) {
          if (si) {
            doc.text += ' ';
            ++cp;
          }
          for (const SpanAnnotation& span : sentences[si].spans) {
            doc.annotations.push_back({span.begin + cp, span.end + cp,
                                       span.resource_iri, span.anchor});
          }
          doc.text += sentences[si].text;
          cp += cp_length(sentences[si].text);
        }
        doc.provenance = std::move(sg);
        for (std::string& w : realizer_warnings) {
          slot_warnings.push_back("document " + id + ": " + std::move(w));
        }
        return doc;
      } catch (const EmptyNeighborhoodError& e) {
        slot_warnings.push_back("document " + id + ": seed <" + seed.value +
                                "> rejected (" + e.what() + "); redrawing");
        seed = pool[gen.below(pool.size())];
      }
    }
    throw GenerationExhaustedError(
        "document " + id + ": no productive seed after " +
        std::to_string(kExtraAttempts + 1) + " attempts");
  };

  std::vector<Document> docs(n);
  std::vector<std::vector<std::string>> slot_warnings(n);
  std::vector<std::exception_ptr> slot_errors(n);
  std::size_t jobs = config.jobs ? config.jobs
                                 : std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  jobs = std::min(jobs, n);

  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= n) return;
      try {
        docs[i] = build_one(i, slot_warnings[i]);
      } catch (...) {
        slot_errors[i] = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  // Index order keeps failure reporting deterministic under any scheduling.
  for (std::size_t i = 0; i < n; ++i) {
    if (slot_errors[i]) std::rethrow_exception(slot_errors[i]);
  }
  corpus.documents = std::move(docs);
  for (std::vector<std::string>& w : slot_warnings) {
    for (std::string& msg : w) corpus.warnings.push_back(std::move(msg));
  }
  return corpus;
}

Corpus generate_corpus(const GenerationConfig& config) {
  KnowledgeBase kb = load_kb(config.kb_path);
  Lexicon lexicon = config.lexicon_path.empty()
                        ? Lexicon{}
                        : Lexicon::from_file(config.lexicon_path);
  SynonymTable synonyms = config.synonym_path.empty()
                              ? SynonymTable{}
                              : SynonymTable::from_file(config.synonym_path);
  return generate_corpus(kb, config, lexicon, synonyms);
}

}  // namespace kbtext
