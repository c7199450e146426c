#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "readengine/lexicon.hpp"

namespace readengine {

struct ResourceBundle {
  LexicalDatabase wordnet;
  SentimentTable sentiment;
  FrequencyTable frequency;

  static ResourceBundle load(const std::filesystem::path& wordnet_dir,
                             const std::filesystem::path& sentiwordnet_path,
                             const std::filesystem::path& frequency_path);
};

// Feature names double as CSV headers and model-artifact weight keys.
enum class Feature : std::size_t {
  definitions_synsets,
  hypernyms,
  hyponyms,
  pos_max,
  neg_max,
  emotionality_max,
  emotionality_sum,
  length,
  syllables,
  flesch,
  frequency,
  zipf,
};

inline constexpr std::size_t kFeatureCount = 12;

inline constexpr std::array<Feature, kFeatureCount> kAllFeatures = {
    Feature::definitions_synsets, Feature::hypernyms,        Feature::hyponyms,
    Feature::pos_max,             Feature::neg_max,          Feature::emotionality_max,
    Feature::emotionality_sum,    Feature::length,           Feature::syllables,
    Feature::flesch,              Feature::frequency,        Feature::zipf,
};

std::string_view feature_name(Feature f);
std::optional<Feature> feature_from_name(std::string_view name);

// READ attribute vector for a single word.
struct ReadFeatures {
  // Representativeness
  int definitions_synsets = 0;
  int hypernyms = 0;
  int hyponyms = 0;
  // Affect
  double pos_max = 0.0;
  double neg_max = 0.0;
  double emotionality_max = 0.0;
  double emotionality_sum = 0.0;
  // Ease of use
  int length = 0;
  int syllables = 0;
  double flesch = 0.0;
  // Distribution
  double frequency = 0.0;
  double zipf = 0.0;

  double get(Feature f) const;
  void set(Feature f, double value);
  std::array<double, kFeatureCount> to_array() const;
  static ReadFeatures from_array(const std::array<double, kFeatureCount>& values);

  bool operator==(const ReadFeatures&) const = default;
};

// Vowel-group heuristic: groups of a,e,i,o,u,y (a leading y is a consonant),
// minus one for a terminal silent 'e' unless that leaves zero, plus one for a
// terminal consonant + "le", floored at one. Non-letters are ignored.
// Throws ArgumentError when the word has no letters.
int syllable_count(std::string_view word);

// 206.835 - 1.015 (words/sentences) - 84.6 (syllables/words). Sentences are
// runs of '.', '!' or '?', at least one. Throws ArgumentError without words.
double flesch_reading_ease(std::string_view text);

// Throws ArgumentError for an empty word or one containing whitespace.
ReadFeatures extract_features(std::string_view word, const ResourceBundle& resources);

}  // namespace readengine
