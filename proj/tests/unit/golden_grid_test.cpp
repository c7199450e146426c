#include <gtest/gtest.h>

#include "readengine/stats.hpp"

namespace readengine {
namespace {

struct GoldenRow {
  TestKind kind;
  double statistic;
  double df;
  double p;
};

constexpr GoldenRow kGrid[] = {
#include "golden_rows.inc"
};

TEST(GoldenGrid, HasSixtyPoints) { EXPECT_EQ(std::size(kGrid), 60u); }

TEST(GoldenGrid, TailFunctionsWithin1e8) {
  for (const auto& row : kGrid) {
    EXPECT_NEAR(upper_tail_p(row.statistic, row.kind, row.df), row.p, 1e-8)
        << to_string(row.kind) << " stat=" << row.statistic << " df=" << row.df;
  }
}

}  // namespace
}  // namespace readengine
