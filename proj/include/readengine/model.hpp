#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "readengine/features.hpp"

namespace readengine {

enum class Dimension { participation, perception, perseverance, ie };

inline constexpr std::array<Dimension, 4> kAllDimensions = {
    Dimension::participation, Dimension::perception, Dimension::perseverance, Dimension::ie};

std::string_view to_string(Dimension d);
std::optional<Dimension> dimension_from_name(std::string_view name);

enum class ModelKind { linear, logistic };

std::string_view to_string(ModelKind kind);

struct CoefficientVector {
  ModelKind kind = ModelKind::logistic;
  double intercept = 0.0;
  std::map<Feature, double> weights;  // absent features contribute nothing

  double linear_term(const ReadFeatures& features) const;
  bool operator==(const CoefficientVector&) const = default;
};

// Published coefficient tables. Participation and perception are linear
// scorers, IE is logistic. Perseverance has no table and throws
// UnsupportedDimensionError.
CoefficientVector paper_coefficients(Dimension dimension);

double sigmoid(double x);

// ArgumentError when the kind does not match.
double linear_score(const ReadFeatures& features, const CoefficientVector& coefs);
double logistic_probability(const ReadFeatures& features, const CoefficientVector& coefs);

// Linear score or probability depending on coefs.kind.
double model_score(const ReadFeatures& features, const CoefficientVector& coefs);

inline constexpr double kDefaultThreshold = 0.5;

// 1 iff probability >= threshold (inclusive).
int classify(double probability, double threshold = kDefaultThreshold);

struct ClassificationMetrics {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  // Set when any ratio had a zero denominator and was reported as 0.
  bool degenerate = false;
};

ClassificationMetrics metrics_from_counts(std::uint64_t tp, std::uint64_t fp, std::uint64_t fn, std::uint64_t tn);
ClassificationMetrics evaluate_classification(std::span<const int> predictions, std::span<const int> labels);

struct TrainConfig {
  double learning_rate = 0.05;
  int iterations = 5000;
  double l2_penalty = 0.0;
  bool standardize = true;
  std::uint64_t seed = 42;
};

struct TrainingSample {
  ReadFeatures features;
  int label = 0;
};

// A fitted logistic model plus what is needed to reproduce it.
struct TrainedModel {
  CoefficientVector coefficients;  // raw feature space
  TrainConfig config;
  std::array<double, kFeatureCount> feature_means{};
  std::array<double, kFeatureCount> feature_scales{};
  std::vector<double> loss_trace;  // objective before each update, then final
};

// Full-batch gradient descent on mean negative log-likelihood plus
// (l2_penalty / 2) * |w|^2 (intercept unpenalized). Weights start at zero.
TrainedModel fit_logistic(std::span<const TrainingSample> data, const TrainConfig& config = {});

struct LabeledWord {
  std::string word;
  std::optional<ReadFeatures> features;
  std::map<Dimension, int> labels;
};

// Seeded Fisher-Yates shuffle, then the first round(n * fraction) go to
// training. fraction must be in (0, 1].
std::pair<std::vector<LabeledWord>, std::vector<LabeledWord>> split_dataset(std::vector<LabeledWord> data,
                                                                            double train_fraction,
                                                                            std::uint64_t seed);

}  // namespace readengine
