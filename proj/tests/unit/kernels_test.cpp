#include <gtest/gtest.h>

#include <omp.h>

#include "../common/synthetic.hpp"
#include "readengine/error.hpp"
#include "readengine/kernels.hpp"
#include "support.hpp"

namespace readengine {
namespace {

std::vector<std::string> vocabulary(std::size_t n) {
  const auto& words = testing::full_bundle().frequency.words();
  return {words.begin(), words.begin() + static_cast<std::ptrdiff_t>(std::min(n, words.size()))};
}

class ThreadCount {
 public:
  explicit ThreadCount(int n) : saved_(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~ThreadCount() { omp_set_num_threads(saved_); }

 private:
  int saved_;
};

TEST(Kernels, FeatureExtractionParallelEqualsSerial) {
  const auto words = vocabulary(3000);
  const auto& b = testing::full_bundle();
  const auto serial = kernels::extract_features_serial(words, b);
  const auto parallel = kernels::extract_features_parallel(words, b);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) EXPECT_EQ(serial[i], parallel[i]) << words[i];
}

TEST(Kernels, ScoringParallelEqualsSerial) {
  const auto words = vocabulary(2000);
  const auto features = kernels::extract_features_serial(words, testing::full_bundle());
  for (Dimension d : {Dimension::participation, Dimension::perception, Dimension::ie}) {
    const auto c = paper_coefficients(d);
    EXPECT_EQ(kernels::score_serial(features, c), kernels::score_parallel(features, c));
  }
}

TEST(Kernels, ParallelErrorsPropagate) {
  const std::vector<std::string> words{"star", "", "maven"};
  EXPECT_THROW(kernels::extract_features_parallel(words, testing::mini_bundle()), ArgumentError);
}

TEST(Kernels, LogisticObjectiveMatchesSerialAndIsThreadInvariant) {
  const auto samples = synthetic::logistic_samples(paper_coefficients(Dimension::ie), 5000, 13);
  std::vector<kernels::FeatureRow> rows;
  std::vector<int> labels;
  for (const auto& s : samples) {
    rows.push_back(s.features.to_array());
    labels.push_back(s.label);
  }
  kernels::FeatureRow w{};
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = 0.001 * static_cast<double>(j + 1);

  const auto serial = kernels::logistic_objective_serial(rows, labels, -0.5, w);
  kernels::LogisticObjective reference;
  {
    ThreadCount one(1);
    reference = kernels::logistic_objective_parallel(rows, labels, -0.5, w);
  }
  EXPECT_NEAR(reference.loss, serial.loss, 1e-12 * std::abs(serial.loss));
  EXPECT_NEAR(reference.grad_intercept, serial.grad_intercept, 1e-12);
  for (std::size_t j = 0; j < w.size(); ++j) {
    EXPECT_NEAR(reference.grad_weights[j], serial.grad_weights[j], 1e-10 * (1.0 + std::abs(serial.grad_weights[j])));
  }
  for (int threads : {2, 3, 8}) {
    ThreadCount tc(threads);
    const auto p = kernels::logistic_objective_parallel(rows, labels, -0.5, w);
    EXPECT_EQ(p.loss, reference.loss) << threads;
    EXPECT_EQ(p.grad_intercept, reference.grad_intercept) << threads;
    EXPECT_EQ(p.grad_weights, reference.grad_weights) << threads;
  }
}

TEST(Kernels, TrainingIsThreadInvariant) {
  const auto samples = synthetic::logistic_samples(paper_coefficients(Dimension::ie), 1500, 2);
  TrainConfig cfg;
  cfg.iterations = 200;
  TrainedModel a;
  {
    ThreadCount one(1);
    a = fit_logistic(samples, cfg);
  }
  ThreadCount many(6);
  EXPECT_EQ(fit_logistic(samples, cfg).coefficients, a.coefficients);
}

}  // namespace
}  // namespace readengine
