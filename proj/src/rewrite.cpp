#include "readengine/rewrite.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>
#include <unordered_set>

namespace readengine {

namespace {

constexpr std::array<std::string_view, 127> kStopwords = {
    "i",       "me",      "my",      "myself",  "we",         "our",     "ours",    "ourselves", "you",
    "your",    "yours",   "yourself", "yourselves", "he",     "him",     "his",     "himself",   "she",
    "her",     "hers",    "herself", "it",      "its",        "itself",  "they",    "them",      "their",
    "theirs",  "themselves", "what", "which",   "who",        "whom",    "this",    "that",      "these",
    "those",   "am",      "is",      "are",     "was",        "were",    "be",      "been",      "being",
    "have",    "has",     "had",     "having",  "do",         "does",    "did",     "doing",     "a",
    "an",      "the",     "and",     "but",     "if",         "or",      "because", "as",        "until",
    "while",   "of",      "at",      "by",      "for",        "with",    "about",   "against",   "between",
    "into",    "through", "during",  "before",  "after",      "above",   "below",   "to",        "from",
    "up",      "down",    "in",      "out",     "on",         "off",     "over",    "under",     "again",
    "further", "then",    "once",    "here",    "there",      "when",    "where",   "why",       "how",
    "all",     "any",     "both",    "each",    "few",        "more",    "most",    "other",     "some",
    "such",    "no",      "nor",     "not",     "only",       "own",     "same",    "so",        "than",
    "too",     "very",    "s",       "t",       "can",        "will",    "just",    "don",       "should",
    "now",
};

// True when the lemma, with underscores read as spaces, is one word token
// (or, if multiword is allowed, several tokens separated by single spaces).
bool is_clean_lemma(std::string_view lemma, bool allow_multiword) {
  std::string spaced(lemma);
  std::replace(spaced.begin(), spaced.end(), '_', ' ');
  const auto spans = text::word_spans(spaced);
  if (spans.empty()) return false;
  if (!allow_multiword) return spans.size() == 1 && spans[0].start == 0 && spans[0].end == spaced.size();
  std::size_t expected = 0;
  for (const auto& span : spans) {
    if (span.start != expected) return false;
    expected = span.end + 1;
  }
  return spans.back().end == spaced.size() && spans.size() == static_cast<std::size_t>(std::count(spaced.begin(), spaced.end(), ' ')) + 1;
}

std::string mirror_case(std::string_view original, std::string_view replacement) {
  std::string out(replacement);
  std::replace(out.begin(), out.end(), '_', ' ');
  std::size_t letters = 0;
  bool all_upper = true;
  for (char c : original) {
    if (!text::is_ascii_alpha(c)) continue;
    ++letters;
    if (c < 'A' || c > 'Z') all_upper = false;
  }
  if (letters > 1 && all_upper) return text::to_upper(out);
  out = text::to_lower(out);
  if (!original.empty() && original.front() >= 'A' && original.front() <= 'Z' && !out.empty() &&
      out.front() >= 'a' && out.front() <= 'z') {
    out.front() = static_cast<char>(out.front() - 'a' + 'A');
  }
  return out;
}

class ScoreCache {
 public:
  ScoreCache(const ResourceBundle& resources, const CoefficientVector& model) : resources_(resources), model_(model) {}
  double operator()(const std::string& normalized) {
    const auto it = cache_.find(normalized);
    if (it != cache_.end()) return it->second;
    const double score = model_score(extract_features(normalized, resources_), model_);
    cache_.emplace(normalized, score);
    return score;
  }

 private:
  const ResourceBundle& resources_;
  const CoefficientVector& model_;
  std::unordered_map<std::string, double> cache_;
};

std::optional<double> mean_word_score(const std::vector<Token>& tokens, ScoreCache& score) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& t : tokens) {
    if (!t.is_word) continue;
    sum += score(t.normalized);
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t cursor = 0;
  auto push_separator = [&](std::size_t end) {
    if (end > cursor) tokens.push_back({std::string(text.substr(cursor, end - cursor)), {}, false, {cursor, end}});
  };
  for (const auto& span : text::word_spans(text)) {
    push_separator(span.start);
    const std::string surface(text.substr(span.start, span.end - span.start));
    tokens.push_back({surface, text::to_lower(surface), true, span});
    cursor = span.end;
  }
  push_separator(text.size());
  return tokens;
}

std::span<const std::string_view> stopwords() { return kStopwords; }

bool is_stopword(std::string_view normalized_word) {
  return std::find(kStopwords.begin(), kStopwords.end(), normalized_word) != kStopwords.end();
}

std::vector<Alternative> WordNetCandidateProvider::alternatives(std::string_view normalized_word,
                                                                const ResourceBundle& resources) const {
  std::vector<Alternative> out;
  for (const Synset* synset : resources.wordnet.synsets_of(normalized_word)) {
    for (const auto& lemma : synset->lemmas) out.push_back({text::normalize_lemma(lemma), synset->id});
  }
  return out;
}

const CandidateProvider& wordnet_provider() {
  static const WordNetCandidateProvider provider;
  return provider;
}

std::vector<SubstitutionCandidate> candidates_for(std::string_view word, const ResourceBundle& resources,
                                                  const RewritePolicy& policy, const CandidateProvider& provider) {
  std::vector<SubstitutionCandidate> out;
  const std::string original = text::to_lower(word);
  if (original.empty() || text::word_spans(original).empty()) return out;
  if (policy.skip_stopwords && is_stopword(original)) return out;

  const auto alternatives = provider.alternatives(original, resources);
  if (alternatives.empty()) return out;
  const double original_score = model_score(extract_features(original, resources), policy.model);

  std::unordered_set<std::string> seen{original};
  for (const auto& alt : alternatives) {
    if (!seen.insert(alt.lemma).second) continue;
    if (!is_clean_lemma(alt.lemma, policy.allow_multiword)) continue;
    const double replacement_score = model_score(extract_features(alt.lemma, resources), policy.model);
    out.push_back({original, alt.lemma, alt.shared_synset, original_score, replacement_score,
                   replacement_score - original_score});
  }
  std::sort(out.begin(), out.end(), [](const SubstitutionCandidate& a, const SubstitutionCandidate& b) {
    if (a.delta != b.delta) return a.delta > b.delta;
    return a.replacement < b.replacement;
  });
  return out;
}

RewriteResult rewrite_text(std::string_view text, const ResourceBundle& resources, const RewritePolicy& policy,
                           const CandidateProvider& provider) {
  RewriteResult result;
  result.original_text = std::string(text);
  ScoreCache score(resources, policy.model);

  auto tokens = tokenize(text);
  result.original_mean_score = mean_word_score(tokens, score);

  std::string modified;
  modified.reserve(text.size());
  for (auto& token : tokens) {
    const bool budget_left =
        !policy.max_substitutions || result.substitutions.size() < *policy.max_substitutions;
    if (token.is_word && budget_left) {
      auto candidates = candidates_for(token.surface, resources, policy, provider);
      if (!candidates.empty() && candidates.front().delta > policy.min_delta) {
        token.surface = mirror_case(token.surface, candidates.front().replacement);
        result.substitutions.push_back(std::move(candidates.front()));
      }
    }
    modified += token.surface;
  }
  result.modified_text = std::move(modified);
  result.modified_mean_score = mean_word_score(tokenize(result.modified_text), score);
  return result;
}

namespace kernels {

std::vector<RewriteResult> rewrite_serial(std::span<const std::string> texts, const ResourceBundle& resources,
                                          const RewritePolicy& policy) {
  std::vector<RewriteResult> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(rewrite_text(t, resources, policy));
  return out;
}

}  // namespace kernels

}  // namespace readengine
