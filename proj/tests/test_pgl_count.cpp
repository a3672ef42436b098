#include <gtest/gtest.h>

#include <numeric>

#include "campana/padic_oracle.hpp"
#include "campana/pgl_count.hpp"

using namespace campana;

namespace {

std::vector<std::vector<Multiplicity>> multiplicity_set(const std::vector<const char*>& specs) {
  std::vector<std::vector<Multiplicity>> out;
  for (const char* s : specs) out.push_back(parse_multiplicities(s));
  return out;
}

u64 total(const std::vector<u64>& h) { return std::accumulate(h.begin(), h.end(), u64{0}); }

}  // namespace

TEST(PglCount, UnitBoundExample) {
  // det in {+-1, +-2}; m = 2 keeps exactly the unimodular classes.
  EXPECT_EQ(count_pgl_campana(2, 1, parse_multiplicities("2")).count, 20u);
  EXPECT_EQ(count_pgl_campana(2, 1, parse_multiplicities("1")).count, 24u);
}

TEST(PglCount, MatchesMinorOracleByHeight) {
  const auto ms = multiplicity_set({"1", "2", "3", "inf"});
  for (i64 b : {1, 3, 7, 12}) {
    EXPECT_EQ(count_pgl_campana_by_height(2, b, ms), oracle::pgl_campana_count_oracle_by_height(2, b, ms)) << b;
  }
  const auto ms3 = multiplicity_set({"1,1", "2,2", "2,inf", "inf,3"});
  for (i64 b : {1, 2}) {
    EXPECT_EQ(count_pgl_campana_by_height(3, b, ms3), oracle::pgl_campana_count_oracle_by_height(3, b, ms3)) << b;
  }
}

TEST(PglCount, FrozenRegressionValue) {
  // Fixed by the minor-gcd oracle; the acceptance run re-derives it.
  EXPECT_EQ(count_pgl_campana(2, 30, parse_multiplicities("2")).count, 448724u);
}

TEST(PglCount, MultiplicityOneIsUnconstrained) {
  const auto run = count_pgl_campana(2, 9, parse_multiplicities("1"));
  EXPECT_EQ(run.count, run.scanned);
  EXPECT_TRUE(run.rejections_by_prime.empty());
}

TEST(PglCount, SignQuotientHalvesMatrixCount) {
  const i64 b = 6;
  u64 matrices = 0;
  for (i64 a = -b; a <= b; ++a)
    for (i64 c = -b; c <= b; ++c)
      for (i64 d = -b; d <= b; ++d)
        for (i64 e = -b; e <= b; ++e) {
          if (a * e - c * d == 0) continue;
          if (gcd(gcd(a, c), gcd(d, e)) != 1) continue;
          ++matrices;
        }
  EXPECT_EQ(2 * count_pgl_campana(2, b, parse_multiplicities("1")).scanned, matrices);
}

TEST(PglCount, StatisticsAreConsistent) {
  for (const char* m : {"2", "3", "inf"}) {
    const auto run = count_pgl_campana(2, 15, parse_multiplicities(m));
    u64 rejected = 0;
    for (const auto& [p, c] : run.rejections_by_prime) {
      EXPECT_TRUE(is_prime(p));
      rejected += c;
    }
    EXPECT_EQ(rejected, run.scanned - run.count);
    EXPECT_EQ(total(run.accepted_by_height), run.count);
    EXPECT_LE(run.count, run.scanned);
  }
}

TEST(PglCount, MonotoneInMultiplicity) {
  const auto ms = multiplicity_set({"1", "2", "3", "4", "inf"});
  const auto hist = count_pgl_campana_by_height(2, 40, ms);
  for (i64 b = 1; b <= 40; ++b) {
    std::vector<u64> cum;
    for (const auto& h : hist) cum.push_back(std::accumulate(h.begin(), h.begin() + b + 1, u64{0}));
    for (std::size_t k = 1; k < cum.size(); ++k) EXPECT_LE(cum[k], cum[k - 1]) << "B=" << b;
  }
}

TEST(PglCount, ThreadCountDoesNotChangeResult) {
  const auto m = parse_multiplicities("2");
  const auto one = count_pgl_campana(2, 25, m, 1);
  const auto four = count_pgl_campana(2, 25, m, 4);
  EXPECT_EQ(to_json(one, false).dump(), to_json(four, false).dump());
  const auto m3 = parse_multiplicities("2,2");
  EXPECT_EQ(count_pgl_campana(3, 2, m3, 1).accepted_by_height, count_pgl_campana(3, 2, m3, 3).accepted_by_height);
}

TEST(PglCount, RejectsBadInput) {
  const auto m = parse_multiplicities("2");
  EXPECT_THROW(count_pgl_campana(4, 3, parse_multiplicities("2,2,2")), std::invalid_argument);
  EXPECT_THROW(count_pgl_campana(2, 0, m), std::invalid_argument);
  EXPECT_THROW(count_pgl_campana(3, 2, m), std::invalid_argument);
  EXPECT_THROW(count_pgl_campana(2, 100000, m), std::invalid_argument);
}

TEST(GrowthReportTest, ReportShape) {
  const std::vector<i64> bounds{10, 20, 40, 80};
  const auto report = growth_report(2, parse_multiplicities("2"), bounds);
  ASSERT_EQ(report.rows.size(), 4u);
  EXPECT_EQ(report.rows[2].second, count_pgl_campana(2, 40, parse_multiplicities("2")).count);
  EXPECT_EQ(report.predicted.a, 3);
  EXPECT_EQ(report.lambda, (std::vector<Rational>{make_rational(1, 2)}));
  EXPECT_FALSE(report.notes.empty());
  EXPECT_GT(report.fit.exponent, 2.0);

  const auto rational_points = growth_report(2, parse_multiplicities("1"), bounds);
  EXPECT_EQ(rational_points.predicted.a, 4);

  EXPECT_THROW(growth_report(2, parse_multiplicities("2"), std::vector<i64>{10, 20, 40}), std::invalid_argument);
  EXPECT_THROW(growth_report(2, parse_multiplicities("2"), std::vector<i64>{10, 20, 20, 40}), std::invalid_argument);
}

TEST(GrowthReportTest, SyntheticQuadraticFit) {
  std::vector<std::pair<double, double>> samples;
  for (double b : {10.0, 20.0, 40.0, 80.0}) samples.emplace_back(b, b * b);
  EXPECT_NEAR(fit_growth(samples).exponent, 2.0, 1e-12);
}
