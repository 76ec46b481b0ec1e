#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kbtext/corpus.hpp"
#include "kbtext/emit.hpp"
#include "kbtext/errors.hpp"
#include "kbtext/kb.hpp"
#include "kbtext/lexicon.hpp"
#include "kbtext/stats.hpp"

namespace py = pybind11;
using namespace kbtext;

namespace {

Corpus generate_with_paths(const KnowledgeBase& kb,
                           const GenerationConfig& config) {
  Lexicon lexicon = config.lexicon_path.empty()
                        ? Lexicon{}
                        : Lexicon::from_file(config.lexicon_path);
  SynonymTable synonyms = config.synonym_path.empty()
                              ? SynonymTable{}
                              : SynonymTable::from_file(config.synonym_path);
  return generate_corpus(kb, config, lexicon, synonyms);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Deterministic KB-to-text benchmark corpus generator";
  m.attr("__version__") = KBTEXT_VERSION;

  py::register_exception<Error>(m, "Error");

  py::class_<KnowledgeBase>(m, "KnowledgeBase")
      .def_static(
          "from_text",
          [](const std::string& text) { return parse_ntriples(text); },
          py::arg("text"), "Parse N-Triples text into an indexed KB.")
      .def_static(
          "load", [](const std::string& path) { return load_kb(path); },
          py::arg("path"), "Load an .nt or .nt.gz file.")
      .def("__len__", &KnowledgeBase::size)
      .def(
          "label_of",
          [](const KnowledgeBase& kb, const std::string& iri,
             const std::string& lang) {
            return kb.label_of(Term::iri(iri), lang);
          },
          py::arg("iri"), py::arg("lang") = "en")
      .def(
          "instances_of",
          [](const KnowledgeBase& kb, const std::vector<std::string>& classes) {
            std::vector<std::string> out;
            for (const Term& t : kb.instances_of(classes)) {
              out.push_back(t.value);
            }
            return out;
          },
          py::arg("class_iris"));

  py::class_<SpanAnnotation>(m, "Span")
      .def_readonly("begin", &SpanAnnotation::begin)
      .def_readonly("end", &SpanAnnotation::end)
      .def_readonly("iri", &SpanAnnotation::resource_iri)
      .def_readonly("anchor", &SpanAnnotation::anchor)
      .def("__repr__", [](const SpanAnnotation& a) {
        return "Span(" + std::to_string(a.begin) + ", " +
               std::to_string(a.end) + ", " + a.resource_iri + ")";
      });

  py::class_<Document>(m, "Document")
      .def_readonly("id", &Document::id)
      .def_readonly("text", &Document::text)
      .def_readonly("annotations", &Document::annotations)
      .def_readonly("truncated", &Document::truncated);

  py::class_<GenerationConfig>(m, "GenerationConfig")
      .def(py::init<>())
      .def_readwrite("kb_path", &GenerationConfig::kb_path)
      .def_readwrite("class_iris", &GenerationConfig::class_iris)
      .def_property(
          "strategy",
          [](const GenerationConfig& c) {
            return std::string(strategy_name(c.strategy));
          },
          [](GenerationConfig& c, const std::string& name) {
            auto s = strategy_from_name(name);
            if (!s) throw Error("unknown strategy '" + name + "'");
            c.strategy = *s;
          })
      .def_readwrite("document_count", &GenerationConfig::document_count)
      .def_property(
          "dmin",
          [](const GenerationConfig& c) { return c.bounds.d_min; },
          [](GenerationConfig& c, std::size_t v) { c.bounds.d_min = v; })
      .def_property(
          "dmax",
          [](const GenerationConfig& c) { return c.bounds.d_max; },
          [](GenerationConfig& c, std::size_t v) { c.bounds.d_max = v; })
      .def_readwrite("paraphrase", &GenerationConfig::paraphrase)
      .def_readwrite("master_seed", &GenerationConfig::master_seed)
      .def_readwrite("language", &GenerationConfig::language)
      .def_readwrite("coverage_threshold",
                     &GenerationConfig::coverage_threshold)
      .def_readwrite("lexicon_path", &GenerationConfig::lexicon_path)
      .def_readwrite("synonym_path", &GenerationConfig::synonym_path)
      .def_readwrite("jobs", &GenerationConfig::jobs);

  py::class_<Corpus>(m, "Corpus")
      .def_readonly("documents", &Corpus::documents)
      .def_readonly("warnings", &Corpus::warnings)
      .def_readonly("generator_version", &Corpus::generator_version)
      .def("__len__",
           [](const Corpus& c) { return c.documents.size(); });

  py::class_<CorpusStats>(m, "CorpusStats")
      .def_readonly("document_count", &CorpusStats::document_count)
      .def_readonly("token_count", &CorpusStats::token_count)
      .def_readonly("entity_count", &CorpusStats::entity_count)
      .def_readonly("tokens_per_doc", &CorpusStats::tokens_per_doc)
      .def_readonly("entities_per_doc", &CorpusStats::entities_per_doc)
      .def_readonly("entity_density", &CorpusStats::entity_density);

  m.def("generate_corpus", &generate_with_paths, py::arg("kb"),
        py::arg("config"), py::call_guard<py::gil_scoped_release>(),
        "Generate a corpus from a loaded KB; lexicon and synonym paths are "
        "taken from the config.");
  m.def(
      "generate",
      [](const GenerationConfig& config) { return generate_corpus(config); },
      py::arg("config"), py::call_guard<py::gil_scoped_release>(),
      "Generate a corpus loading the KB from config.kb_path.");
  m.def("emit_nif", &emit_nif, py::arg("corpus"));
  m.def("emit_jsonl", &emit_jsonl, py::arg("corpus"));
  m.def(
      "parse_nif", [](const std::string& text) { return parse_nif(text); },
      py::arg("text"));
  m.def(
      "parse_jsonl", [](const std::string& text) { return parse_jsonl(text); },
      py::arg("text"));
  m.def(
      "validate_documents",
      [](const std::vector<Document>& docs) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const ValidationIssue& i : validate_documents(docs)) {
          out.emplace_back(i.document_id, i.message);
        }
        return out;
      },
      py::arg("documents"),
      "Annotation exactness issues as (document_id, message) pairs.");
  m.def(
      "compute_stats",
      [](const std::vector<Document>& docs) { return compute_stats(docs); },
      py::arg("documents"));
  m.def(
      "corpus_stats", [](const Corpus& c) { return compute_stats(c); },
      py::arg("corpus"));
  m.def("stats_tsv", &stats_tsv, py::arg("stats"));
  m.def("pearson", &pearson, py::arg("xs"), py::arg("ys"));
  m.def("document_id", &document_id, py::arg("index"), py::arg("count"));
}
