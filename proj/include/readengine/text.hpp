#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace readengine::text {

inline bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

std::string to_lower(std::string_view s);
std::string to_upper(std::string_view s);

// Lowercase, trim, and map interior spaces to underscores (wndb lemma form).
std::string normalize_lemma(std::string_view s);

struct Span {
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive
};

// Maximal runs of ASCII letters, allowing single apostrophes between letters
// ("what's" is one run, "rock'n'roll" too, a trailing "'" is not included).
std::vector<Span> word_spans(std::string_view s);

// Number of UTF-8 code points.
std::size_t utf8_length(std::string_view s);

}  // namespace readengine::text
