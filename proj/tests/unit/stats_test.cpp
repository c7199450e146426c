#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "readengine/error.hpp"
#include "readengine/stats.hpp"

namespace readengine {
namespace {

TEST(ChiSquare, HandExpandedTable) {
  // expected cells all 15
  const auto r = chi_square_2x2({10, 20, 20, 10});
  EXPECT_NEAR(r.statistic, 6.6667, 1e-4);
  EXPECT_NEAR(r.p_value, 0.0098, 5e-4);
  EXPECT_EQ(r.df, 1.0);
  EXPECT_EQ(r.kind, TestKind::chi_square);
}

TEST(ChiSquare, UniformAndExtremeTables) {
  const auto flat = chi_square_2x2({15, 15, 15, 15});
  EXPECT_EQ(flat.statistic, 0.0);
  EXPECT_NEAR(flat.p_value, 1.0, 1e-15);
  const auto split = chi_square_2x2({0, 30, 30, 0});
  EXPECT_NEAR(split.statistic, 60.0, 1e-9);
  EXPECT_LT(split.p_value, 1e-13);
  EXPECT_THROW(chi_square_2x2({0, 0, 10, 10}), DegenerateError);
  EXPECT_THROW(chi_square_2x2({0, 10, 0, 10}), DegenerateError);
}

TEST(TwoProportionZ, PooledExamples) {
  const auto r = two_proportion_z(30, 100, 20, 100);
  EXPECT_NEAR(r.statistic, 1.633, 1e-3);
  EXPECT_NEAR(r.p_value, 0.1025, 1e-3);
  const auto same = two_proportion_z(40, 100, 20, 50);
  EXPECT_NEAR(same.statistic, 0.0, 1e-12);
  EXPECT_NEAR(same.p_value, 1.0, 1e-12);
  // pooled 0.5: z = 1 / sqrt(0.25 * 0.02)
  const auto far = two_proportion_z(100, 100, 0, 100);
  EXPECT_NEAR(far.statistic, 14.1421356, 1e-6);
  EXPECT_LT(far.p_value, 1e-11);
  EXPECT_THROW(two_proportion_z(0, 100, 0, 100), DegenerateError);
  EXPECT_THROW(two_proportion_z(5, 0, 1, 10), ArgumentError);
}

TEST(PairedT, DifferenceOfOneTwoThree) {
  const std::vector<double> x{1, 2, 3};
  const std::vector<double> y{2, 4, 6};
  const auto r = paired_t_test(x, y);
  EXPECT_NEAR(r.statistic, 3.464, 1e-3);
  EXPECT_EQ(r.df, 2.0);
  EXPECT_NEAR(r.p_value, 0.0742, 2e-3);
}

TEST(PairedT, ConstantDifferencesAreDegenerate) {
  const std::vector<double> x{1, 2};
  const std::vector<double> y{1.5, 2.5};
  EXPECT_THROW(paired_t_test(x, x), DegenerateError);
  EXPECT_THROW(paired_t_test(x, y), DegenerateError);
  const std::vector<double> one{1};
  EXPECT_THROW(paired_t_test(one, one), ArgumentError);
}

TEST(PearsonR, Examples) {
  const std::vector<double> x{1, 2, 3, 4};
  std::vector<double> affine;
  std::vector<double> negated;
  for (double v : x) {
    affine.push_back(2 * v + 1);
    negated.push_back(-v);
  }
  EXPECT_NEAR(pearson_r(x, affine).statistic, 1.0, 1e-12);
  EXPECT_NEAR(pearson_r(x, negated).statistic, -1.0, 1e-12);
  const std::vector<double> y{1, 3, 2, 4};
  const auto r = pearson_r(x, y);
  EXPECT_NEAR(r.statistic, 0.8, 1e-9);
  EXPECT_NEAR(r.p_value, 0.2, 0.01);
  EXPECT_EQ(r.df, 2.0);
  const std::vector<double> flat{5, 5, 5, 5};
  EXPECT_THROW(pearson_r(x, flat), DegenerateError);
}

TEST(Cronbach, ConsistentColumns) {
  const std::vector<std::vector<double>> same{{1, 1}, {2, 2}, {3, 3}};
  EXPECT_NEAR(cronbach_alpha(same), 1.0, 1e-12);
  const std::vector<std::vector<double>> shifted{{1, 4}, {2, 5}, {3, 6}};
  EXPECT_NEAR(cronbach_alpha(shifted), 1.0, 1e-12);
}

TEST(Cronbach, IndependentColumnsNearZero) {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> n01;
  std::vector<std::vector<double>> rows(10000);
  for (auto& r : rows) r = {n01(rng), n01(rng)};
  EXPECT_NEAR(cronbach_alpha(rows), 0.0, 0.05);
}

TEST(TailFunctions, Anchors) {
  EXPECT_NEAR(upper_tail_p(6.6667, TestKind::chi_square, 1), 0.0098, 5e-4);
  EXPECT_NEAR(upper_tail_p(1.96, TestKind::z, 0), 0.0500, 2e-4);
  EXPECT_NEAR(upper_tail_p(0.0, TestKind::t, 7), 1.0, 1e-15);
  EXPECT_NEAR(upper_tail_p(0.0, TestKind::t, 1), 1.0, 1e-15);
  // F(1, d) at t^2 equals the two-sided t tail
  EXPECT_NEAR(upper_tail_p(9.0, TestKind::f, 1, 12), upper_tail_p(3.0, TestKind::t, 12), 1e-12);
  EXPECT_THROW(upper_tail_p(std::nan(""), TestKind::z, 0), ArgumentError);
  EXPECT_THROW(upper_tail_p(-1.0, TestKind::chi_square, 1), ArgumentError);
  EXPECT_THROW(upper_tail_p(1.0, TestKind::t, 0), ArgumentError);
}

TEST(SpecialFunctions, Identities) {
  EXPECT_NEAR(special::gamma_p(1.0, 2.0), 1.0 - std::exp(-2.0), 1e-14);
  EXPECT_NEAR(special::gamma_p(3.0, 4.0) + special::gamma_q(3.0, 4.0), 1.0, 1e-14);
  EXPECT_NEAR(special::beta_inc(1.0, 1.0, 0.3), 0.3, 1e-14);
  EXPECT_NEAR(special::beta_inc(2.0, 3.0, 0.4), 1.0 - special::beta_inc(3.0, 2.0, 0.6), 1e-14);
  EXPECT_NEAR(special::normal_sf(0.0), 0.5, 1e-15);
}

TEST(Descriptives, MeanAndSd) {
  const std::vector<double> xs{2, 4, 4, 4, 5, 5, 7, 9};
  EXPECT_DOUBLE_EQ(mean(xs), 5.0);
  EXPECT_NEAR(sample_sd(xs), std::sqrt(32.0 / 7.0), 1e-12);
}

TEST(ExperimentRecord, ReverseCodesNegativeItems) {
  ExperimentRecord r;
  r.ues_items = {5, 1, 5, 1, 5, 1, 5, 1};
  EXPECT_DOUBLE_EQ(r.perception_score(), 5.0);
  r.ues_items = {3, 3, 3, 3, 3, 3, 3, 3};
  EXPECT_DOUBLE_EQ(r.perception_score(), 3.0);
  r.ues_items = {4, 2, 4, 2, 4, 4, 4, 4};
  EXPECT_DOUBLE_EQ(r.perception_score(), 3.5);
}

}  // namespace
}  // namespace readengine
