#pragma once

// Turns raw word-pair exposure records into per-word significance labels.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "readengine/model.hpp"
#include "readengine/stats.hpp"

namespace readengine {

struct WordPair {
  std::string pair_id;
  std::string first;
  std::string second;
};

// Pairs in order of first appearance. Throws DataError listing every pair id
// that does not have exactly two distinct words.
std::vector<WordPair> derive_pairs(std::span<const ExperimentRecord> records);

struct WordExposure {
  std::string word;
  std::uint64_t exposures = 0;
  std::uint64_t selected = 0;
  std::uint64_t high_perception = 0;  // observations with coded UES mean >= 4.0
  std::uint64_t recalled = 0;
  double perception_sum = 0.0;

  double selection_rate() const;
  double high_perception_rate() const;
  double recall_rate() const;
  double mean_perception() const;
};

// The three behavioral dimensions tested per pair.
inline constexpr std::array<Dimension, 3> kTestedDimensions = {Dimension::participation, Dimension::perception,
                                                               Dimension::perseverance};

struct DimensionTest {
  Dimension dimension = Dimension::participation;
  std::optional<TestResult> result;  // empty when the table was degenerate
  bool significant = false;
  int winner = -1;  // 0 = first word, 1 = second word, -1 = none
};

struct PairAnalysis {
  std::string pair_id;
  std::array<WordExposure, 2> words;
  std::array<DimensionTest, 3> tests;  // ordered as kTestedDimensions
};

// Participation and perseverance: 2x2 chi-square on selected / recalled
// counts. Perception: two-proportion z on the rate of high-perception
// observations. Degenerate tables count as not significant.
std::vector<PairAnalysis> analyze_pairs(std::span<const ExperimentRecord> records, std::span<const WordPair> pairs,
                                        double alpha = 0.05);

// Within a significant pair the higher-rate word is labeled 1 and its partner
// 0; non-significant pairs label both 0. ie is the conjunction of the three.
// Output order follows `pairs` (first word, then second).
std::vector<LabeledWord> label_from_experiment(std::span<const ExperimentRecord> records,
                                               std::span<const WordPair> pairs, double alpha = 0.05);

}  // namespace readengine
