#pragma once
// Small string helpers shared by the parser, the loaders, and the
// sentence matcher. ASCII-only case folding: the supported datasets
// are English and non-ASCII bytes pass through untouched.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sense_reduce {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c;
}

inline std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(ascii_lower(c));
  return out;
}

inline std::string_view trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

// Trims and collapses every whitespace run to a single space.
inline std::string collapse_ws(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending = false;
  for (char c : trim(s)) {
    if (is_space(c)) {
      pending = true;
      continue;
    }
    if (pending && !out.empty()) out.push_back(' ');
    pending = false;
    out.push_back(c);
  }
  return out;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

// Tokens separated by whitespace runs, with [start,end) byte spans.
struct Token {
  std::string text;
  size_t start = 0;
  size_t end = 0;
};

inline std::vector<Token> whitespace_tokens(std::string_view s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    if (i >= s.size()) break;
    size_t b = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    out.push_back({std::string(s.substr(b, i - b)), b, i});
  }
  return out;
}

// Canonical lemma form: lowercase, spaces -> underscores.
inline std::string canonical_lemma(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : trim(s)) out.push_back(c == ' ' ? '_' : ascii_lower(c));
  return out;
}

inline bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '\'' || c == '-' || static_cast<unsigned char>(c) >= 0x80;
}

// Case-insensitive, word-boundary search for `needle` (spaces allowed)
// in `hay`. Returns the byte span of the first occurrence.
inline std::optional<std::pair<size_t, size_t>> find_word(std::string_view hay,
                                                          std::string_view needle) {
  if (needle.empty() || needle.size() > hay.size()) return std::nullopt;
  for (size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    bool hit = true;
    for (size_t j = 0; j < needle.size(); ++j) {
      if (ascii_lower(hay[i + j]) != ascii_lower(needle[j])) {
        hit = false;
        break;
      }
    }
    if (!hit) continue;
    bool left_ok = i == 0 || !is_word_char(hay[i - 1]);
    size_t e = i + needle.size();
    bool right_ok = e == hay.size() || !is_word_char(hay[e]);
    if (left_ok && right_ok) return std::make_pair(i, e);
  }
  return std::nullopt;
}

// Tab/newline/backslash escaping for tab-separated dump files.
inline std::string escape_field(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string unescape_field(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\' || i + 1 == s.size()) {
      out.push_back(s[i]);
      continue;
    }
    switch (s[++i]) {
      case '\\': out.push_back('\\'); break;
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      default: out.push_back(s[i]);
    }
  }
  return out;
}

}  // namespace sense_reduce
