#include <exception>

#include <omp.h>

#include "kernels_common.hpp"
#include "readengine/kernels.hpp"
#include "readengine/rewrite.hpp"

namespace readengine::kernels {

namespace {

// Exceptions must not cross an OpenMP region; keep the first one by index.
class FirstError {
 public:
  explicit FirstError(std::size_t n) : errors_(n) {}
  void capture(std::size_t i) { errors_[i] = std::current_exception(); }
  void rethrow() const {
    for (const auto& e : errors_) {
      if (e) std::rethrow_exception(e);
    }
  }

 private:
  std::vector<std::exception_ptr> errors_;
};

}  // namespace

int max_threads() { return omp_get_max_threads(); }

std::vector<ReadFeatures> extract_features_parallel(std::span<const std::string> words, const ResourceBundle& resources) {
  const auto n = static_cast<std::ptrdiff_t>(words.size());
  std::vector<ReadFeatures> out(words.size());
  FirstError errors(words.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = extract_features(words[static_cast<std::size_t>(i)], resources);
    } catch (...) {
      errors.capture(static_cast<std::size_t>(i));
    }
  }
  errors.rethrow();
  return out;
}

std::vector<double> score_parallel(std::span<const ReadFeatures> features, const CoefficientVector& coefs) {
  // model_score only throws on a kind mismatch, which cannot happen here
  const auto n = static_cast<std::ptrdiff_t>(features.size());
  std::vector<double> out(features.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = model_score(features[static_cast<std::size_t>(i)], coefs);
  }
  return out;
}

LogisticObjective logistic_objective_parallel(std::span<const FeatureRow> rows, std::span<const int> labels,
                                              double intercept, const FeatureRow& weights) {
  const std::size_t n = rows.size();
  const std::size_t blocks = (n + kReductionBlock - 1) / kReductionBlock;
  std::vector<LogisticObjective> partial(blocks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
    const std::size_t begin = static_cast<std::size_t>(b) * kReductionBlock;
    const std::size_t end = std::min(n, begin + kReductionBlock);
    LogisticObjective acc;
    for (std::size_t i = begin; i < end; ++i) detail::accumulate_sample(rows[i], labels[i], intercept, weights, acc);
    partial[static_cast<std::size_t>(b)] = acc;
  }
  LogisticObjective total;
  for (const auto& part : partial) detail::add_into(total, part);
  detail::scale(total, 1.0 / static_cast<double>(n));
  return total;
}

std::vector<RewriteResult> rewrite_parallel(std::span<const std::string> texts, const ResourceBundle& resources,
                                            const RewritePolicy& policy) {
  const auto n = static_cast<std::ptrdiff_t>(texts.size());
  std::vector<RewriteResult> out(texts.size());
  FirstError errors(texts.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = rewrite_text(texts[static_cast<std::size_t>(i)], resources, policy);
    } catch (...) {
      errors.capture(static_cast<std::size_t>(i));
    }
  }
  errors.rethrow();
  return out;
}

}  // namespace readengine::kernels
