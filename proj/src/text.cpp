#include "kbtext/text.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "kbtext/errors.hpp"

namespace kbtext {

static bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

std::size_t cp_length(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char b : s) {
    if (!is_continuation(b)) ++n;
  }
  return n;
}

std::size_t cp_to_byte(std::string_view s, std::size_t cp) {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!is_continuation(static_cast<unsigned char>(s[i]))) {
      if (seen == cp) return i;
      ++seen;
    }
  }
  return s.size();
}

std::string cp_substr(std::string_view s, std::size_t begin, std::size_t end) {
  std::size_t b = cp_to_byte(s, begin);
  std::size_t e = cp_to_byte(s, end);
  return std::string(s.substr(b, e - b));
}

bool is_cp_boundary(std::string_view s, std::size_t byte_pos) {
  if (byte_pos >= s.size()) return true;
  return !is_continuation(static_cast<unsigned char>(s[byte_pos]));
}

void append_utf8(std::string& out, uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

char ascii_upper(char c) {
  if (c >= 'a' && c <= 'z') return static_cast<char>(c - 'a' + 'A');
  return c;
}

bool ascii_alnum_byte(char c) {
  unsigned char b = static_cast<unsigned char>(c);
  return (b >= '0' && b <= '9') || (b >= 'a' && b <= 'z') ||
         (b >= 'A' && b <= 'Z');
}

void capitalize_first(std::string& s) {
  if (!s.empty()) s[0] = ascii_upper(s[0]);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace kbtext
