#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Small UTF-8 and string helpers. All span arithmetic in this library counts
// Unicode scalar values, not bytes, so these helpers are used anywhere text
// offsets are produced or consumed.

namespace kbtext {

// Number of Unicode scalar values in a UTF-8 string.
std::size_t cp_length(std::string_view s);

// Byte offset of the cp-th scalar value (cp may equal cp_length, giving size()).
std::size_t cp_to_byte(std::string_view s, std::size_t cp);

// Substring by scalar-value offsets, half-open [begin, end).
std::string cp_substr(std::string_view s, std::size_t begin, std::size_t end);

// True if the byte at `byte_pos` starts a scalar value (or is the end).
bool is_cp_boundary(std::string_view s, std::size_t byte_pos);

// Appends a scalar value as UTF-8.
void append_utf8(std::string& out, uint32_t cp);

std::vector<std::string> split_whitespace(std::string_view s);

// ASCII-only case helpers; non-ASCII bytes pass through untouched.
std::string ascii_lower(std::string_view s);
char ascii_upper(char c);
bool ascii_alnum_byte(char c);

// Uppercases the first ASCII letter byte of a UTF-8 string in place.
void capitalize_first(std::string& s);

// Whole file as bytes; throws IoError when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace kbtext
