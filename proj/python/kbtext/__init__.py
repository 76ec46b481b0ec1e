"""Deterministic generator of entity-annotated text corpora from RDF KBs."""

from ._core import (
    Corpus,
    CorpusStats,
    Document,
    Error,
    GenerationConfig,
    KnowledgeBase,
    Span,
    __version__,
    compute_stats,
    corpus_stats,
    document_id,
    emit_jsonl,
    emit_nif,
    generate,
    generate_corpus,
    parse_jsonl,
    parse_nif,
    pearson,
    stats_tsv,
    validate_documents,
)

__all__ = [
    "Corpus",
    "CorpusStats",
    "Document",
    "Error",
    "GenerationConfig",
    "KnowledgeBase",
    "Span",
    "__version__",
    "compute_stats",
    "corpus_stats",
    "document_id",
    "emit_jsonl",
    "emit_nif",
    "generate",
    "generate_corpus",
    "parse_jsonl",
    "parse_nif",
    "pearson",
    "stats_tsv",
    "validate_documents",
]
