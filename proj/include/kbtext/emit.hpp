#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kbtext/corpus.hpp"

namespace kbtext {

// Base for per-document context and phrase IRIs in the NIF output.
inline constexpr std::string_view kCorpusIriBase = "http://example.org/corpus/";

// One nif:Context per document carrying the full text, one phrase node per
// annotation with begin/end offsets (Unicode scalar values, half open),
// anchor text, and the linked resource. Every line is a plain N-Triples
// statement, so the output is Turtle and N-Triples at the same time.
std::string emit_nif(const Corpus& corpus);

// One JSON object per line: {"id", "text", "annotations": [[begin, end,
// iri], ...]}, UTF-8, trailing newline.
std::string emit_jsonl(const Corpus& corpus);

// Writes bytes exactly as given. Throws IoError.
void write_file(const std::string& path, std::string_view bytes);

// Readers for the two formats; id, text, and annotations survive the round
// trip (NIF also restores anchors), provenance does not. Documents come
// back sorted by id. Throw Error/SyntaxError on malformed input.
std::vector<Document> parse_nif(std::string_view turtle);
std::vector<Document> parse_jsonl(std::string_view text);

struct ValidationIssue {
  std::string document_id;
  std::string message;
};

// Re-checks every annotation: inside the text, ordered, non-overlapping,
// anchor equal to the spanned substring when the anchor is known, and span
// edges on word boundaries either way.
std::vector<ValidationIssue> validate_documents(
    const std::vector<Document>& docs);

}  // namespace kbtext
