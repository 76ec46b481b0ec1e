#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kbtext/corpus.hpp"
#include "kbtext/emit.hpp"
#include "kbtext/errors.hpp"
#include "kbtext/stats.hpp"
#include "kbtext/text.hpp"

namespace fs = std::filesystem;
using namespace kbtext;

namespace {

bool has_suffix(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// nif for Turtle-ish paths, jsonl for .jsonl; an explicit flag wins.
std::string detect_format(const std::string& path, const std::string& flag) {
  if (!flag.empty()) return flag;
  if (has_suffix(path, ".ttl") || has_suffix(path, ".nt")) return "nif";
  if (has_suffix(path, ".jsonl") || has_suffix(path, ".json")) return "jsonl";
  return "";
}

std::vector<Document> read_documents(const std::string& path,
                                     const std::string& format) {
  std::string text = read_text_file(path);
  return format == "nif" ? parse_nif(text) : parse_jsonl(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "kbtext: deterministic generator of entity-annotated text corpora "
      "from RDF knowledge bases"};
  app.set_version_flag("--version", KBTEXT_VERSION);
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand(
      "generate", "sample subgraphs from a KB and verbalize them");
  std::string kb_path, strategy = "star", lexicon_path, synonyms_path;
  std::string out_dir = ".", format = "both", config_path;
  std::vector<std::string> classes;
  std::size_t docs = 100, dmin = 1, dmax = 5, jobs = 0;
  bool paraphrase = false;
  uint64_t seed = 0;
  double coverage = 0.60;
  gen->add_option("--kb", kb_path, "N-Triples file (.nt, optionally .gz)");
  gen->add_option("--classes", classes,
                  "seed class IRIs or CURIEs, comma separated")
      ->delimiter(',');
  gen->add_option("--strategy", strategy, "subgraph sampling strategy")
      ->check(CLI::IsMember({"star", "symstar", "path", "hybrid", "summary"}));
  gen->add_option("--docs", docs, "number of documents");
  gen->add_option("--dmin", dmin, "minimum triples per document");
  gen->add_option("--dmax", dmax, "maximum triples per document");
  gen->add_flag("--paraphrase", paraphrase, "apply the paraphrase pass");
  gen->add_option("--seed", seed, "master RNG seed");
  gen->add_option("--lexicon", lexicon_path, "predicate lexicon TSV");
  gen->add_option("--synonyms", synonyms_path, "synonym table TSV");
  gen->add_option("--coverage-threshold", coverage,
                  "summary clustering coverage threshold in (0,1]");
  gen->add_option("--out", out_dir, "output directory");
  gen->add_option("--format", format, "corpus formats to write")
      ->check(CLI::IsMember({"nif", "jsonl", "both"}));
  gen->add_option("--jobs", jobs, "worker threads (0 = auto)");
  gen->add_option("--config", config_path,
                  "key=value config file; flags override it");

  // stats
  auto* stats_cmd =
      app.add_subcommand("stats", "corpus feature summary as TSV");
  std::string stats_in, stats_format, stats_out;
  stats_cmd->add_option("--in", stats_in, "corpus file (.ttl or .jsonl)")
      ->required();
  stats_cmd->add_option("--format", stats_format, "input format")
      ->check(CLI::IsMember({"nif", "jsonl"}));
  stats_cmd->add_option("--out", stats_out, "output file (default stdout)");

  // validate
  auto* validate_cmd = app.add_subcommand(
      "validate", "re-check span exactness of an emitted corpus");
  std::string val_in, val_format;
  validate_cmd->add_option("--in", val_in, "corpus file (.ttl or .jsonl)")
      ->required();
  validate_cmd->add_option("--format", val_format, "input format")
      ->check(CLI::IsMember({"nif", "jsonl"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) {
      GenerationConfig cfg;
      if (!config_path.empty()) cfg = load_config_file(config_path);
      if (gen->count("--kb")) cfg.kb_path = kb_path;
      if (gen->count("--classes")) {
        cfg.class_iris.clear();
        for (const std::string& c : classes) {
          cfg.class_iris.push_back(expand_curie(c));
        }
      }
      if (gen->count("--strategy")) cfg.strategy = *strategy_from_name(strategy);
      if (gen->count("--docs")) cfg.document_count = docs;
      if (gen->count("--dmin")) cfg.bounds.d_min = dmin;
      if (gen->count("--dmax")) cfg.bounds.d_max = dmax;
      if (gen->count("--paraphrase")) cfg.paraphrase = true;
      if (gen->count("--seed")) cfg.master_seed = seed;
      if (gen->count("--lexicon")) cfg.lexicon_path = lexicon_path;
      if (gen->count("--synonyms")) cfg.synonym_path = synonyms_path;
      if (gen->count("--coverage-threshold")) cfg.coverage_threshold = coverage;
      if (gen->count("--jobs")) cfg.jobs = jobs;

      if (cfg.kb_path.empty()) {
        std::fprintf(stderr, "error: --kb is required\n");
        return 1;
      }
      if (cfg.class_iris.empty()) {
        std::fprintf(stderr, "error: --classes is required\n");
        return 1;
      }

      Corpus corpus = generate_corpus(cfg);
      for (const std::string& w : corpus.warnings) {
        std::fprintf(stderr, "warning: %s\n", w.c_str());
      }
      fs::create_directories(out_dir);
      if (format == "nif" || format == "both") {
        std::string path = (fs::path(out_dir) / "corpus.ttl").string();
        write_file(path, emit_nif(corpus));
        std::printf("wrote %s\n", path.c_str());
      }
      if (format == "jsonl" || format == "both") {
        std::string path = (fs::path(out_dir) / "corpus.jsonl").string();
        write_file(path, emit_jsonl(corpus));
        std::printf("wrote %s\n", path.c_str());
      }
      std::printf("documents: %zu\n", corpus.documents.size());
      return 0;
    }

    if (stats_cmd->parsed()) {
      std::string fmt = detect_format(stats_in, stats_format);
      if (fmt.empty()) {
        std::fprintf(stderr,
                     "error: cannot infer format of %s; pass --format\n",
                     stats_in.c_str());
        return 1;
      }
      std::string tsv = stats_tsv(compute_stats(read_documents(stats_in, fmt)));
      if (stats_out.empty()) {
        std::fputs(tsv.c_str(), stdout);
      } else {
        write_file(stats_out, tsv);
      }
      return 0;
    }

    if (validate_cmd->parsed()) {
      std::string fmt = detect_format(val_in, val_format);
      if (fmt.empty()) {
        std::fprintf(stderr,
                     "error: cannot infer format of %s; pass --format\n",
                     val_in.c_str());
        return 1;
      }
      std::vector<Document> docs_in = read_documents(val_in, fmt);
      std::vector<ValidationIssue> issues = validate_documents(docs_in);
      if (issues.empty()) {
        std::size_t spans = 0;
        for (const Document& d : docs_in) spans += d.annotations.size();
        std::printf("ok: %zu documents, %zu annotations\n", docs_in.size(),
                    spans);
        return 0;
      }
      for (const ValidationIssue& issue : issues) {
        std::fprintf(stderr, "document %s: %s\n", issue.document_id.c_str(),
                     issue.message.c_str());
      }
      return 2;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
