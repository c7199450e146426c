#pragma once

// Seeded generators for test data. Distributions come from <random>; only
// mt19937_64 output is portable, so the derived draws are used for
// properties, never for hard-coded expected values.

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "readengine/model.hpp"
#include "readengine/stats.hpp"

namespace readengine::synthetic {

// Feature j is uniform on [-a_j, a_j] with a_j = 2.6 / |w_j|, so every
// weighted term has standard deviation 1.5. Features the model ignores are
// uniform on [-1, 1]. Labels are Bernoulli(sigmoid(coefs . x)).
inline std::vector<TrainingSample> logistic_samples(const CoefficientVector& coefs, std::size_t n,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::array<double, kFeatureCount> half_width{};
  for (Feature f : kAllFeatures) {
    const auto it = coefs.weights.find(f);
    const double w = it == coefs.weights.end() ? 0.0 : std::abs(it->second);
    half_width[static_cast<std::size_t>(f)] = w > 0.0 ? 2.6 / w : 1.0;
  }
  std::vector<TrainingSample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::array<double, kFeatureCount> x{};
    for (std::size_t j = 0; j < kFeatureCount; ++j) x[j] = half_width[j] * unit(rng);
    const auto features = ReadFeatures::from_array(x);
    const double p = sigmoid(coefs.linear_term(features));
    out.push_back({features, coin(rng) < p ? 1 : 0});
  }
  return out;
}

struct PlantedStudy1 {
  std::vector<ExperimentRecord> records;
  // Per pair, in generation order: which dimensions were planted and the
  // index (0/1) of the winning word.
  std::vector<std::string> pair_ids;
  std::vector<std::array<bool, 3>> planted;
  std::vector<int> winner;
  std::vector<std::array<std::string, 2>> words;
};

// `counts[d]` pairs are planted significant for participation, perception
// and perseverance. The planted sets are nested prefixes of a shuffled pair
// order, so significance on one dimension is strongly associated with the
// others. Each word gets `exposures` records; a planted dimension splits
// 100/160-style (hi vs lo), an unplanted one is identical on both words.
inline PlantedStudy1 study1(std::size_t pairs, std::array<std::size_t, 3> counts, std::uint64_t seed,
                            std::size_t exposures = 160) {
  std::mt19937_64 rng(seed);
  PlantedStudy1 s;
  std::vector<std::size_t> order(pairs);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> rank(pairs);
  for (std::size_t r = 0; r < pairs; ++r) rank[order[r]] = r;

  const std::size_t hi = exposures * 5 / 8;
  const std::size_t lo = exposures / 4;
  const std::size_t mid = exposures / 2;
  std::size_t participant = 0;
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::string pair_id = "p" + std::to_string(1000 + p);
    const std::array<std::string, 2> w = {"alpha" + std::to_string(p), "beta" + std::to_string(p)};
    const int win = static_cast<int>(rng() & 1U);
    std::array<bool, 3> planted{};
    for (std::size_t d = 0; d < 3; ++d) planted[d] = rank[p] < counts[d];
    s.pair_ids.push_back(pair_id);
    s.planted.push_back(planted);
    s.winner.push_back(win);
    s.words.push_back(w);

    for (int k = 0; k < 2; ++k) {
      std::array<std::size_t, 3> positives{};
      for (std::size_t d = 0; d < 3; ++d) positives[d] = planted[d] ? (k == win ? hi : lo) : mid;
      // Scatter positives so the three flags are not aligned record by record.
      std::array<std::vector<bool>, 3> flags;
      for (std::size_t d = 0; d < 3; ++d) {
        flags[d].assign(exposures, false);
        std::fill(flags[d].begin(), flags[d].begin() + static_cast<std::ptrdiff_t>(positives[d]), true);
        std::shuffle(flags[d].begin(), flags[d].end(), rng);
      }
      for (std::size_t e = 0; e < exposures; ++e) {
        ExperimentRecord r;
        r.participant_id = "u" + std::to_string(participant++);
        r.pair_id = pair_id;
        r.word = w[static_cast<std::size_t>(k)];
        r.selected = flags[0][e];
        // High perception: positive items 5, negative items 1 (coded mean 5).
        // Otherwise positive 2, negative 4 (coded mean 2).
        for (std::size_t i = 0; i < 8; ++i) {
          const bool negative = i % 2 == 1;
          r.ues_items[i] = flags[1][e] ? (negative ? 1 : 5) : (negative ? 4 : 2);
        }
        r.recalled = flags[2][e];
        s.records.push_back(std::move(r));
      }
    }
  }
  return s;
}

// Original metrics drawn around the reported baselines; modified adds a
// fixed lift plus small noise.
inline std::vector<TitlePairRecord> study3(std::size_t pairs, double lift, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<TitlePairRecord> out;
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::string id = "t" + std::to_string(p);
    TitlePairRecord o{id, TitleVariant::original, 48.0 + 8.0 * noise(rng), 3.9 + 0.3 * noise(rng),
                      58.0 + 8.0 * noise(rng)};
    TitlePairRecord m{id, TitleVariant::modified, o.selection_rate + lift + 2.0 * noise(rng),
                      o.evaluation_avg + lift / 20.0 + 0.1 * noise(rng), o.retention_rate + lift + 2.0 * noise(rng)};
    out.push_back(o);
    out.push_back(m);
  }
  return out;
}

// Headline-like strings mixing casing, punctuation, digits, stopwords and
// non-ASCII bytes.
inline std::vector<std::string> titles(std::size_t n, std::uint64_t seed) {
  static const std::vector<std::string> kVocabulary = {
      "maven",    "star",     "party",    "media",     "movement",  "accountability", "new",      "pirate",
      "draining", "vigor",    "secret",   "health",    "money",     "city",           "water",    "energy",
      "review",   "market",   "science",  "election",  "teacher",   "student",        "climate",  "crisis",
      "study",    "reveals",  "hidden",   "danger",    "simple",    "trick",          "doctor",   "coffee",
      "morning",  "habit",    "big",      "small",     "quick",     "guide",          "expert",   "warns",
      "the",      "of",       "and",      "a",         "is",        "your",           "what's",   "why",
      "how",      "to",       "in",       "for",       "with",      "home",           "car",      "music",
      "film",     "game",     "winner",   "team",      "coach",     "plan",           "rock'n'roll", "caf\xc3\xa9",
      "self-serving", "2024", "U.S.",     "AI",        "COVID-19",  "naïve",          "e-mail",   "top",
  };
  static const std::vector<std::string> kSeparators = {" ", " ", " ", ", ", " - ", ": ", "  ", " / ", " (", ") "};
  static const std::vector<std::string> kEndings = {"", "?", "!", ".", "...", "!?", " :)", "\""};
  std::mt19937_64 rng(seed);
  std::vector<std::string> out;
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t len = 3 + rng() % 10;
    std::string title = (rng() % 7 == 0) ? "\"" : "";
    for (std::size_t i = 0; i < len; ++i) {
      std::string w = kVocabulary[rng() % kVocabulary.size()];
      switch (rng() % 5) {
        case 0:
          for (auto& c : w) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
          break;
        case 1:
        case 2:
          w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
          break;
        default:
          break;
      }
      if (i > 0) title += kSeparators[rng() % kSeparators.size()];
      title += w;
    }
    title += kEndings[rng() % kEndings.size()];
    out.push_back(std::move(title));
  }
  return out;
}

}  // namespace readengine::synthetic
