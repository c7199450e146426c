#pragma once

// Hypothesis tests used for significance labeling and before/after analysis.
// Every reported p-value is two-sided except chi-square, which is the upper
// tail. No continuity correction is applied anywhere.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace readengine {

enum class TestKind { chi_square, z, t, r, f };

std::string_view to_string(TestKind kind);

struct TestResult {
  double statistic = 0.0;
  double df = 0.0;
  double p_value = 1.0;
  TestKind kind = TestKind::chi_square;
};

// Rows are groups, columns are outcomes: [[a, b], [c, d]].
struct ContingencyTable2x2 {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t d = 0;
};

namespace special {

// Regularized lower/upper incomplete gamma P(a, x), Q(a, x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Regularized incomplete beta I_x(a, b).
double beta_inc(double a, double b, double x);

// Standard normal upper tail.
double normal_sf(double z);

}  // namespace special

// chi_square: upper tail of chi-square(df).
// z: two-sided normal tail (df ignored).
// t, r: two-sided Student t tail with df (r expects the t-transformed value).
// f: upper tail of F(df, df2).
double upper_tail_p(double statistic, TestKind kind, double df, double df2 = 0.0);

// Pearson chi-square with df = 1. DegenerateError on a zero marginal.
TestResult chi_square_2x2(const ContingencyTable2x2& table);

// Pooled two-proportion z test of x1/n1 against x2/n2; z > 0 when the first
// proportion is larger.
TestResult two_proportion_z(std::uint64_t x1, std::uint64_t n1, std::uint64_t x2, std::uint64_t n2);

// Differences are y - x; df = n - 1.
TestResult paired_t_test(std::span<const double> x, std::span<const double> y);

// Sample correlation; the t-based p-value uses df = n - 2.
TestResult pearson_r(std::span<const double> x, std::span<const double> y);

// rows = respondents, cols = items.
double cronbach_alpha(const std::vector<std::vector<double>>& items);

double mean(std::span<const double> xs);
double sample_sd(std::span<const double> xs);

// One participant's exposure to one word.
struct ExperimentRecord {
  std::string participant_id;
  std::string pair_id;
  std::string word;
  bool selected = false;
  // EA, EA-n, FA, FA-n, PU, PU-n, RW, RW-n raw Likert responses in [1, 5].
  std::array<int, 8> ues_items{};
  bool recalled = false;

  // Mean of the eight items after reverse-coding the negative ones (6 - raw).
  double perception_score() const;
};

inline constexpr double kHighPerceptionThreshold = 4.0;

enum class TitleVariant { original, modified };

struct TitlePairRecord {
  std::string pair_id;
  TitleVariant variant = TitleVariant::original;
  double selection_rate = 0.0;  // percent
  double evaluation_avg = 0.0;  // 1..5
  double retention_rate = 0.0;  // percent
};

}  // namespace readengine
