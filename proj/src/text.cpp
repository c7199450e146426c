#include "readengine/text.hpp"

#include <algorithm>

namespace readengine::text {

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
  });
  return out;
}

std::string to_upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](char c) {
    return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
  });
  return out;
}

std::string normalize_lemma(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  std::string out = to_lower(s.substr(first, last - first + 1));
  std::replace(out.begin(), out.end(), ' ', '_');
  return out;
}

std::vector<Span> word_spans(std::string_view s) {
  std::vector<Span> spans;
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    if (!is_ascii_alpha(s[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < n) {
      if (is_ascii_alpha(s[i])) {
        ++i;
      } else if (s[i] == '\'' && i + 1 < n && is_ascii_alpha(s[i + 1])) {
        i += 2;
      } else {
        break;
      }
    }
    spans.push_back({start, i});
  }
  return spans;
}

std::size_t utf8_length(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

}  // namespace readengine::text
