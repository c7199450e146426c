#include "readengine/model.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "readengine/error.hpp"

namespace readengine {

std::string_view to_string(Dimension d) {
  switch (d) {
    case Dimension::participation: return "participation";
    case Dimension::perception: return "perception";
    case Dimension::perseverance: return "perseverance";
    case Dimension::ie: return "ie";
  }
  return "?";
}

std::optional<Dimension> dimension_from_name(std::string_view name) {
  for (Dimension d : kAllDimensions) {
    if (to_string(d) == name) return d;
  }
  return std::nullopt;
}

std::string_view to_string(ModelKind kind) { return kind == ModelKind::linear ? "linear" : "logistic"; }

double CoefficientVector::linear_term(const ReadFeatures& features) const {
  double sum = intercept;
  for (const auto& [feature, weight] : weights) sum += weight * features.get(feature);
  return sum;
}

CoefficientVector paper_coefficients(Dimension dimension) {
  using F = Feature;
  switch (dimension) {
    case Dimension::participation:
      return {ModelKind::linear,
              0.207,
              {{F::hypernyms, 0.001},
               {F::hyponyms, -4.169e-6},
               {F::definitions_synsets, 0.000},
               {F::emotionality_max, 0.028},
               {F::emotionality_sum, -0.021},
               {F::length, -0.001},
               {F::flesch, 2.634e-6},
               {F::syllables, -0.002},
               {F::zipf, 0.005}}};
    case Dimension::perception:
      return {ModelKind::linear,
              2.297,
              {{F::definitions_synsets, 0.000},
               {F::hypernyms, -0.005},
               {F::hyponyms, 0.000},
               {F::pos_max, 0.126},
               {F::emotionality_max, 0.047},
               {F::neg_max, -0.113},
               {F::length, -0.019},
               {F::flesch, -0.001},
               {F::syllables, -0.041},
               {F::zipf, 0.108},
               {F::frequency, -175.563}}};
    case Dimension::ie:
      return {ModelKind::logistic,
              -2.0611,
              {{F::definitions_synsets, -0.0375},
               {F::hypernyms, -0.1023},
               {F::hyponyms, 0.0184},
               {F::pos_max, 0.1312},
               {F::neg_max, -0.0686},
               {F::syllables, -0.0700},
               {F::length, -0.0410},
               {F::frequency, -0.2195},
               {F::zipf, 0.5569}}};
    case Dimension::perseverance:
      break;
  }
  throw UnsupportedDimensionError(
      "no published coefficient table for perseverance; fit a model with `train --dimension perseverance`");
}

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double linear_score(const ReadFeatures& features, const CoefficientVector& coefs) {
  if (coefs.kind != ModelKind::linear) throw ArgumentError("linear_score: coefficients are logistic");
  return coefs.linear_term(features);
}

double logistic_probability(const ReadFeatures& features, const CoefficientVector& coefs) {
  if (coefs.kind != ModelKind::logistic) throw ArgumentError("logistic_probability: coefficients are linear");
  return sigmoid(coefs.linear_term(features));
}

double model_score(const ReadFeatures& features, const CoefficientVector& coefs) {
  return coefs.kind == ModelKind::logistic ? logistic_probability(features, coefs) : linear_score(features, coefs);
}

int classify(double probability, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) throw ArgumentError("classify: threshold outside [0, 1]");
  if (!(probability >= 0.0 && probability <= 1.0)) throw ArgumentError("classify: probability outside [0, 1]");
  return probability >= threshold ? 1 : 0;
}

ClassificationMetrics metrics_from_counts(std::uint64_t tp, std::uint64_t fp, std::uint64_t fn, std::uint64_t tn) {
  ClassificationMetrics m{tp, fp, fn, tn};
  auto ratio = [&m](double num, double den) {
    if (den == 0.0) {
      m.degenerate = true;
      return 0.0;
    }
    return num / den;
  };
  const double dtp = static_cast<double>(tp);
  m.accuracy = ratio(dtp + static_cast<double>(tn), static_cast<double>(tp + fp + fn + tn));
  m.precision = ratio(dtp, static_cast<double>(tp + fp));
  m.recall = ratio(dtp, static_cast<double>(tp + fn));
  m.f1 = ratio(2.0 * m.precision * m.recall, m.precision + m.recall);
  return m;
}

ClassificationMetrics evaluate_classification(std::span<const int> predictions, std::span<const int> labels) {
  if (predictions.size() != labels.size()) throw ArgumentError("evaluate_classification: length mismatch");
  if (predictions.empty()) throw ArgumentError("evaluate_classification: no observations");
  std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const bool predicted = predictions[i] != 0;
    const bool actual = labels[i] != 0;
    if (predicted && actual) ++tp;
    else if (predicted) ++fp;
    else if (actual) ++fn;
    else ++tn;
  }
  return metrics_from_counts(tp, fp, fn, tn);
}

std::pair<std::vector<LabeledWord>, std::vector<LabeledWord>> split_dataset(std::vector<LabeledWord> data,
                                                                            double train_fraction,
                                                                            std::uint64_t seed) {
  if (data.empty()) throw ArgumentError("split_dataset: empty dataset");
  if (!(train_fraction > 0.0 && train_fraction <= 1.0)) {
    throw ArgumentError("split_dataset: train_fraction must be in (0, 1]");
  }
  // Explicit Fisher-Yates over raw mt19937_64 output: std::shuffle and the
  // standard distributions are not specified bit-for-bit across libraries.
  std::mt19937_64 rng(seed);
  for (std::size_t i = data.size() - 1; i > 0; --i) {
    const std::uint64_t bound = i + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw = rng();
    while (draw >= limit) draw = rng();
    std::swap(data[i], data[static_cast<std::size_t>(draw % bound)]);
  }
  const auto n_train = static_cast<std::size_t>(std::llround(static_cast<double>(data.size()) * train_fraction));
  std::vector<LabeledWord> test(std::make_move_iterator(data.begin() + static_cast<std::ptrdiff_t>(n_train)),
                                std::make_move_iterator(data.end()));
  data.resize(n_train);
  return {std::move(data), std::move(test)};
}

}  // namespace readengine
