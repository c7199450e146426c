#pragma once

// Data-parallel kernels. Each has a plain serial reference and an OpenMP
// variant; outputs are ordered by input position in both. The parallel
// logistic objective reduces fixed-size blocks in block order, so its result
// does not depend on the thread count.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "readengine/features.hpp"
#include "readengine/model.hpp"

namespace readengine::kernels {

using FeatureRow = std::array<double, kFeatureCount>;

// Samples per reduction block in the parallel objective.
inline constexpr std::size_t kReductionBlock = 256;

std::vector<ReadFeatures> extract_features_serial(std::span<const std::string> words, const ResourceBundle& resources);
std::vector<ReadFeatures> extract_features_parallel(std::span<const std::string> words, const ResourceBundle& resources);

std::vector<double> score_serial(std::span<const ReadFeatures> features, const CoefficientVector& coefs);
std::vector<double> score_parallel(std::span<const ReadFeatures> features, const CoefficientVector& coefs);

struct LogisticObjective {
  double loss = 0.0;  // mean negative log-likelihood
  double grad_intercept = 0.0;
  FeatureRow grad_weights{};
};

LogisticObjective logistic_objective_serial(std::span<const FeatureRow> rows, std::span<const int> labels,
                                            double intercept, const FeatureRow& weights);
LogisticObjective logistic_objective_parallel(std::span<const FeatureRow> rows, std::span<const int> labels,
                                              double intercept, const FeatureRow& weights);

int max_threads();

}  // namespace readengine::kernels
