#include "readengine/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "readengine/error.hpp"

namespace readengine {

namespace special {

namespace {

constexpr double kEpsilon = 1e-16;
constexpr double kTiny = 1e-300;
constexpr int kMaxIterations = 10000;

double log_gamma_prefactor(double a, double x) { return -x + a * std::log(x) - std::lgamma(a); }

// Series for P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int n = 0; n < kMaxIterations; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEpsilon) break;
  }
  return sum * std::exp(log_gamma_prefactor(a, x));
}

// Lentz continued fraction for Q(a, x), valid for x >= a + 1.
double gamma_q_fraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEpsilon) break;
  }
  return std::exp(log_gamma_prefactor(a, x)) * h;
}

double beta_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m < kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEpsilon) break;
  }
  return h;
}

}  // namespace

double gamma_p(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) throw ArgumentError("gamma_p: requires a > 0 and x >= 0");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_fraction(a, x);
}

double gamma_q(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) throw ArgumentError("gamma_q: requires a > 0 and x >= 0");
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_fraction(a, x);
}

double beta_inc(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || !(x >= 0.0 && x <= 1.0)) {
    throw ArgumentError("beta_inc: requires a, b > 0 and x in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front =
      std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_fraction(a, b, x) / a;
  return 1.0 - front * beta_fraction(b, a, 1.0 - x) / b;
}

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace special

std::string_view to_string(TestKind kind) {
  switch (kind) {
    case TestKind::chi_square: return "chi_square";
    case TestKind::z: return "z";
    case TestKind::t: return "t";
    case TestKind::r: return "r";
    case TestKind::f: return "f";
  }
  return "?";
}

double upper_tail_p(double statistic, TestKind kind, double df, double df2) {
  if (std::isnan(statistic)) throw ArgumentError("upper_tail_p: statistic is NaN");
  switch (kind) {
    case TestKind::chi_square:
      if (!(df >= 1.0)) throw ArgumentError("upper_tail_p: chi-square requires df >= 1");
      if (statistic < 0.0) throw ArgumentError("upper_tail_p: chi-square statistic is negative");
      return std::clamp(special::gamma_q(df / 2.0, statistic / 2.0), 0.0, 1.0);
    case TestKind::z:
      return std::clamp(std::erfc(std::fabs(statistic) / std::sqrt(2.0)), 0.0, 1.0);
    case TestKind::t:
    case TestKind::r: {
      if (!(df >= 1.0)) throw ArgumentError("upper_tail_p: t requires df >= 1");
      if (std::isinf(statistic)) return 0.0;
      const double x = df / (df + statistic * statistic);
      return std::clamp(special::beta_inc(df / 2.0, 0.5, x), 0.0, 1.0);
    }
    case TestKind::f: {
      if (!(df > 0.0) || !(df2 > 0.0)) throw ArgumentError("upper_tail_p: F requires two positive df");
      if (statistic < 0.0) throw ArgumentError("upper_tail_p: F statistic is negative");
      if (std::isinf(statistic)) return 0.0;
      const double x = df2 / (df2 + df * statistic);
      return std::clamp(special::beta_inc(df2 / 2.0, df / 2.0, x), 0.0, 1.0);
    }
  }
  throw ArgumentError("upper_tail_p: unknown test kind");
}

TestResult chi_square_2x2(const ContingencyTable2x2& table) {
  const std::array<double, 4> observed = {static_cast<double>(table.a), static_cast<double>(table.b),
                                          static_cast<double>(table.c), static_cast<double>(table.d)};
  const double row1 = observed[0] + observed[1];
  const double row2 = observed[2] + observed[3];
  const double col1 = observed[0] + observed[2];
  const double col2 = observed[1] + observed[3];
  if (row1 == 0.0 || row2 == 0.0 || col1 == 0.0 || col2 == 0.0) {
    throw DegenerateError("chi_square_2x2: table has a zero marginal");
  }
  const double n = row1 + row2;
  const std::array<double, 4> expected = {row1 * col1 / n, row1 * col2 / n, row2 * col1 / n, row2 * col2 / n};
  double statistic = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const double diff = observed[i] - expected[i];
    statistic += diff * diff / expected[i];
  }
  return {statistic, 1.0, upper_tail_p(statistic, TestKind::chi_square, 1.0), TestKind::chi_square};
}

TestResult two_proportion_z(std::uint64_t x1, std::uint64_t n1, std::uint64_t x2, std::uint64_t n2) {
  if (n1 == 0 || n2 == 0) throw ArgumentError("two_proportion_z: sample sizes must be positive");
  if (x1 > n1 || x2 > n2) throw ArgumentError("two_proportion_z: successes exceed sample size");
  const double p1 = static_cast<double>(x1) / static_cast<double>(n1);
  const double p2 = static_cast<double>(x2) / static_cast<double>(n2);
  const double pooled = static_cast<double>(x1 + x2) / static_cast<double>(n1 + n2);
  if (pooled == 0.0 || pooled == 1.0) throw DegenerateError("two_proportion_z: pooled proportion is 0 or 1");
  const double se = std::sqrt(pooled * (1.0 - pooled) * (1.0 / static_cast<double>(n1) + 1.0 / static_cast<double>(n2)));
  const double z = (p1 - p2) / se;
  return {z, 0.0, upper_tail_p(z, TestKind::z, 0.0), TestKind::z};
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw ArgumentError("mean: empty sample");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_sd(std::span<const double> xs) {
  if (xs.size() < 2) throw ArgumentError("sample_sd: need at least two values");
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

TestResult paired_t_test(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ArgumentError("paired_t_test: samples differ in length");
  if (x.size() < 2) throw ArgumentError("paired_t_test: need at least two pairs");
  std::vector<double> diffs(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diffs[i] = y[i] - x[i];
  const double m = mean(diffs);
  const double sd = sample_sd(diffs);
  if (sd <= 1e-12 * std::max(1.0, std::fabs(m))) {
    throw DegenerateError("paired_t_test: differences have zero variance");
  }
  const double n = static_cast<double>(diffs.size());
  const double t = m / (sd / std::sqrt(n));
  return {t, n - 1.0, upper_tail_p(t, TestKind::t, n - 1.0), TestKind::t};
}

TestResult pearson_r(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ArgumentError("pearson_r: samples differ in length");
  if (x.size() < 3) throw ArgumentError("pearson_r: need at least three pairs");
  const double mx = mean(x);
  const double my = mean(y);
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw DegenerateError("pearson_r: a sample has zero variance");
  const double r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  const double df = static_cast<double>(x.size()) - 2.0;
  const double p = std::fabs(r) >= 1.0 ? 0.0 : upper_tail_p(r * std::sqrt(df / (1.0 - r * r)), TestKind::r, df);
  return {r, df, p, TestKind::r};
}

double cronbach_alpha(const std::vector<std::vector<double>>& items) {
  const std::size_t n = items.size();
  if (n < 2) throw ArgumentError("cronbach_alpha: need at least two respondents");
  const std::size_t k = items.front().size();
  if (k < 2) throw ArgumentError("cronbach_alpha: need at least two items");
  for (const auto& row : items) {
    if (row.size() != k) throw ArgumentError("cronbach_alpha: ragged item matrix");
  }
  double item_variance_sum = 0.0;
  std::vector<double> column(n);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < n; ++i) column[i] = items[i][j];
    const double sd = sample_sd(column);
    item_variance_sum += sd * sd;
  }
  std::vector<double> totals(n);
  for (std::size_t i = 0; i < n; ++i) totals[i] = std::accumulate(items[i].begin(), items[i].end(), 0.0);
  const double total_sd = sample_sd(totals);
  if (total_sd == 0.0) throw DegenerateError("cronbach_alpha: total score has zero variance");
  const double kd = static_cast<double>(k);
  return kd / (kd - 1.0) * (1.0 - item_variance_sum / (total_sd * total_sd));
}

double ExperimentRecord::perception_score() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < ues_items.size(); ++i) {
    sum += (i % 2 == 1) ? 6 - ues_items[i] : ues_items[i];
  }
  return sum / static_cast<double>(ues_items.size());
}

}  // namespace readengine
