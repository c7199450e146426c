#pragma once

#include <algorithm>
#include <cmath>

#include "readengine/kernels.hpp"

namespace readengine::kernels::detail {

inline double softplus(double x) { return std::max(x, 0.0) + std::log1p(std::exp(-std::fabs(x))); }

inline void accumulate_sample(const FeatureRow& row, int label, double intercept, const FeatureRow& weights,
                              LogisticObjective& acc) {
  double z = intercept;
  for (std::size_t j = 0; j < kFeatureCount; ++j) z += weights[j] * row[j];
  const double p = sigmoid(z);
  acc.loss += label != 0 ? softplus(-z) : softplus(z);
  const double residual = p - (label != 0 ? 1.0 : 0.0);
  acc.grad_intercept += residual;
  for (std::size_t j = 0; j < kFeatureCount; ++j) acc.grad_weights[j] += residual * row[j];
}

inline void add_into(LogisticObjective& acc, const LogisticObjective& part) {
  acc.loss += part.loss;
  acc.grad_intercept += part.grad_intercept;
  for (std::size_t j = 0; j < kFeatureCount; ++j) acc.grad_weights[j] += part.grad_weights[j];
}

inline void scale(LogisticObjective& acc, double factor) {
  acc.loss *= factor;
  acc.grad_intercept *= factor;
  for (double& g : acc.grad_weights) g *= factor;
}

}  // namespace readengine::kernels::detail
