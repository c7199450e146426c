#include <cmath>

#include "readengine/error.hpp"
#include "readengine/kernels.hpp"
#include "readengine/model.hpp"

namespace readengine {

namespace {

double penalized_loss(const kernels::LogisticObjective& obj, const kernels::FeatureRow& w, double l2) {
  double norm = 0.0;
  for (double x : w) norm += x * x;
  return obj.loss + 0.5 * l2 * norm;
}

}  // namespace

TrainedModel fit_logistic(std::span<const TrainingSample> data, const TrainConfig& config) {
  if (!(config.learning_rate > 0.0)) throw ArgumentError("fit_logistic: learning_rate must be positive");
  if (config.iterations <= 0) throw ArgumentError("fit_logistic: iterations must be positive");
  if (!(config.l2_penalty >= 0.0)) throw ArgumentError("fit_logistic: l2_penalty must be non-negative");
  if (data.size() < 2) throw DegenerateError("fit_logistic: need at least two samples");

  std::vector<kernels::FeatureRow> rows;
  std::vector<int> labels;
  rows.reserve(data.size());
  labels.reserve(data.size());
  std::size_t positives = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto row = data[i].features.to_array();
    for (double v : row) {
      if (!std::isfinite(v)) throw ArgumentError("fit_logistic: non-finite feature in sample " + std::to_string(i));
    }
    rows.push_back(row);
    const int label = data[i].label != 0 ? 1 : 0;
    positives += static_cast<std::size_t>(label);
    labels.push_back(label);
  }
  if (positives == 0 || positives == data.size()) throw DegenerateError("fit_logistic: labels contain a single class");

  TrainedModel model;
  model.config = config;
  const double n = static_cast<double>(rows.size());
  for (std::size_t j = 0; j < kFeatureCount; ++j) {
    if (!config.standardize) {
      model.feature_means[j] = 0.0;
      model.feature_scales[j] = 1.0;
      continue;
    }
    double sum = 0.0;
    for (const auto& row : rows) sum += row[j];
    const double mean = sum / n;
    double ss = 0.0;
    for (const auto& row : rows) ss += (row[j] - mean) * (row[j] - mean);
    const double sd = std::sqrt(ss / n);
    model.feature_means[j] = mean;
    // constant columns standardize to zero and keep a zero weight
    model.feature_scales[j] = sd > 0.0 ? sd : 1.0;
  }
  for (auto& row : rows) {
    for (std::size_t j = 0; j < kFeatureCount; ++j) {
      row[j] = (row[j] - model.feature_means[j]) / model.feature_scales[j];
    }
  }

  double intercept = 0.0;
  kernels::FeatureRow weights{};
  model.loss_trace.reserve(static_cast<std::size_t>(config.iterations) + 1);
  for (int it = 0; it < config.iterations; ++it) {
    const auto obj = kernels::logistic_objective_parallel(rows, labels, intercept, weights);
    model.loss_trace.push_back(penalized_loss(obj, weights, config.l2_penalty));
    intercept -= config.learning_rate * obj.grad_intercept;
    for (std::size_t j = 0; j < kFeatureCount; ++j) {
      weights[j] -= config.learning_rate * (obj.grad_weights[j] + config.l2_penalty * weights[j]);
    }
  }
  model.loss_trace.push_back(
      penalized_loss(kernels::logistic_objective_parallel(rows, labels, intercept, weights), weights, config.l2_penalty));

  CoefficientVector& coefs = model.coefficients;
  coefs.kind = ModelKind::logistic;
  coefs.intercept = intercept;
  for (std::size_t j = 0; j < kFeatureCount; ++j) {
    const double raw = weights[j] / model.feature_scales[j];
    coefs.weights[kAllFeatures[j]] = raw;
    coefs.intercept -= raw * model.feature_means[j];
  }
  return model;
}

}  // namespace readengine
