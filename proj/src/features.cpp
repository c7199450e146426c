#include "readengine/features.hpp"

#include <algorithm>
#include <unordered_set>

#include "readengine/error.hpp"
#include "readengine/text.hpp"

namespace readengine {

namespace {

constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "definitions_synsets", "hypernyms", "hyponyms", "pos_max",   "neg_max",   "emotionality_max",
    "emotionality_sum",    "length",    "syllables", "flesch",   "frequency", "zipf",
};

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

}  // namespace

ResourceBundle ResourceBundle::load(const std::filesystem::path& wordnet_dir,
                                    const std::filesystem::path& sentiwordnet_path,
                                    const std::filesystem::path& frequency_path) {
  return ResourceBundle{LexicalDatabase::load(wordnet_dir), SentimentTable::load(sentiwordnet_path),
                        FrequencyTable::load(frequency_path)};
}

std::string_view feature_name(Feature f) { return kFeatureNames[static_cast<std::size_t>(f)]; }

std::optional<Feature> feature_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    if (kFeatureNames[i] == name) return static_cast<Feature>(i);
  }
  return std::nullopt;
}

double ReadFeatures::get(Feature f) const {
  switch (f) {
    case Feature::definitions_synsets: return definitions_synsets;
    case Feature::hypernyms: return hypernyms;
    case Feature::hyponyms: return hyponyms;
    case Feature::pos_max: return pos_max;
    case Feature::neg_max: return neg_max;
    case Feature::emotionality_max: return emotionality_max;
    case Feature::emotionality_sum: return emotionality_sum;
    case Feature::length: return length;
    case Feature::syllables: return syllables;
    case Feature::flesch: return flesch;
    case Feature::frequency: return frequency;
    case Feature::zipf: return zipf;
  }
  return 0.0;
}

void ReadFeatures::set(Feature f, double value) {
  switch (f) {
    case Feature::definitions_synsets: definitions_synsets = static_cast<int>(value); break;
    case Feature::hypernyms: hypernyms = static_cast<int>(value); break;
    case Feature::hyponyms: hyponyms = static_cast<int>(value); break;
    case Feature::pos_max: pos_max = value; break;
    case Feature::neg_max: neg_max = value; break;
    case Feature::emotionality_max: emotionality_max = value; break;
    case Feature::emotionality_sum: emotionality_sum = value; break;
    case Feature::length: length = static_cast<int>(value); break;
    case Feature::syllables: syllables = static_cast<int>(value); break;
    case Feature::flesch: flesch = value; break;
    case Feature::frequency: frequency = value; break;
    case Feature::zipf: zipf = value; break;
  }
}

std::array<double, kFeatureCount> ReadFeatures::to_array() const {
  std::array<double, kFeatureCount> out{};
  for (Feature f : kAllFeatures) out[static_cast<std::size_t>(f)] = get(f);
  return out;
}

ReadFeatures ReadFeatures::from_array(const std::array<double, kFeatureCount>& values) {
  ReadFeatures out;
  for (Feature f : kAllFeatures) out.set(f, values[static_cast<std::size_t>(f)]);
  return out;
}

int syllable_count(std::string_view word) {
  std::string letters;
  for (char c : word) {
    if (text::is_ascii_alpha(c)) letters.push_back(c);
  }
  if (letters.empty()) throw ArgumentError("syllable_count: '" + std::string(word) + "' has no letters");
  letters = text::to_lower(letters);

  int groups = 0;
  bool in_group = false;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const bool vowel = is_vowel(letters[i]) && !(i == 0 && letters[i] == 'y');
    if (vowel && !in_group) ++groups;
    in_group = vowel;
  }
  if (letters.back() == 'e' && groups > 1) --groups;
  const std::size_t n = letters.size();
  if (n >= 3 && letters[n - 2] == 'l' && letters[n - 1] == 'e' && !is_vowel(letters[n - 3])) ++groups;
  return std::max(groups, 1);
}

double flesch_reading_ease(std::string_view text) {
  const auto spans = text::word_spans(text);
  if (spans.empty()) throw ArgumentError("flesch_reading_ease: text has no words");

  long syllables = 0;
  for (const auto& span : spans) syllables += syllable_count(text.substr(span.start, span.end - span.start));

  long sentences = 0;
  bool in_terminal = false;
  for (char c : text) {
    const bool terminal = c == '.' || c == '!' || c == '?';
    if (terminal && !in_terminal) ++sentences;
    in_terminal = terminal;
  }
  sentences = std::max(sentences, 1L);

  const double words = static_cast<double>(spans.size());
  return 206.835 - 1.015 * (words / static_cast<double>(sentences)) -
         84.6 * (static_cast<double>(syllables) / words);
}

ReadFeatures extract_features(std::string_view word, const ResourceBundle& resources) {
  if (word.empty()) throw ArgumentError("extract_features: empty word");
  if (std::any_of(word.begin(), word.end(), [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; })) {
    throw ArgumentError("extract_features: '" + std::string(word) + "' is not a single token");
  }
  const std::string normalized = text::to_lower(word);

  ReadFeatures f;
  const auto synsets = resources.wordnet.synsets_of(normalized);
  f.definitions_synsets = static_cast<int>(synsets.size());

  std::unordered_set<SynsetId, SynsetIdHash> hypernyms;
  std::unordered_set<SynsetId, SynsetIdHash> hyponyms;
  for (const Synset* s : synsets) {
    hypernyms.insert(s->hypernym_ids.begin(), s->hypernym_ids.end());
    hyponyms.insert(s->hyponym_ids.begin(), s->hyponym_ids.end());
    const SentimentScore score = resources.sentiment.sentiment_of(s->id);
    const double emotionality = score.pos_score + score.neg_score;
    f.pos_max = std::max(f.pos_max, score.pos_score);
    f.neg_max = std::max(f.neg_max, score.neg_score);
    f.emotionality_max = std::max(f.emotionality_max, emotionality);
    f.emotionality_sum += emotionality;
  }
  f.hypernyms = static_cast<int>(hypernyms.size());
  f.hyponyms = static_cast<int>(hyponyms.size());

  f.length = static_cast<int>(text::utf8_length(normalized));
  f.syllables = syllable_count(normalized);
  f.flesch = 206.835 - 1.015 - 84.6 * f.syllables;

  const ZipfValue z = resources.frequency.zipf_of(normalized);
  f.frequency = z.frequency;
  f.zipf = z.zipf;
  return f;
}

}  // namespace readengine
