#include <cmath>

#include "kernels_common.hpp"
#include "readengine/kernels.hpp"

namespace readengine::kernels {

std::vector<ReadFeatures> extract_features_serial(std::span<const std::string> words, const ResourceBundle& resources) {
  std::vector<ReadFeatures> out;
  out.reserve(words.size());
  for (const auto& word : words) out.push_back(extract_features(word, resources));
  return out;
}

std::vector<double> score_serial(std::span<const ReadFeatures> features, const CoefficientVector& coefs) {
  std::vector<double> out;
  out.reserve(features.size());
  for (const auto& f : features) out.push_back(model_score(f, coefs));
  return out;
}

LogisticObjective logistic_objective_serial(std::span<const FeatureRow> rows, std::span<const int> labels,
                                            double intercept, const FeatureRow& weights) {
  LogisticObjective total;
  for (std::size_t i = 0; i < rows.size(); ++i) detail::accumulate_sample(rows[i], labels[i], intercept, weights, total);
  detail::scale(total, 1.0 / static_cast<double>(rows.size()));
  return total;
}

}  // namespace readengine::kernels
