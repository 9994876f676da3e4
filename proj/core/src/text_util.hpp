#pragma once

#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Internal ASCII text helpers shared by the parsers and the analyzer.
namespace lor::detail {

inline std::string to_lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (unsigned char ch : text) {
    out.push_back(ch < 0x80 ? static_cast<char>(std::tolower(ch)) : static_cast<char>(ch));
  }
  return out;
}

inline std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

// Splits on a single delimiter, keeping empty fields.
inline std::vector<std::string_view> split(std::string_view text, char delim) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(delim, start);
    if (pos == std::string_view::npos) {
      fields.push_back(text.substr(start));
      return fields;
    }
    fields.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

inline std::size_t count_tokens(std::string_view phrase) {
  std::size_t count = 0;
  bool in_token = false;
  for (unsigned char ch : phrase) {
    bool space = std::isspace(ch) != 0;
    if (!space && !in_token) ++count;
    in_token = !space;
  }
  return count;
}

// Joins tokens[span.begin, span.end) with single spaces.
inline std::string join_tokens(std::span<const std::string> tokens, std::size_t begin,
                               std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace lor::detail
