#include <gtest/gtest.h>

#include <cmath>

#include "frameforge/series.hpp"
#include "oracles.hpp"

namespace ff = frameforge;

TEST(PSeries, GeometricClosedForms) {
  EXPECT_NEAR(ff::p_series(1.0, 1.0), 1.0 / (1.0 - std::exp(-1.0)), 1e-13);
  EXPECT_NEAR(ff::p_series(std::log(2.0), 1.0), 2.0, 1e-13);
}

TEST(PSeries, SquareRootExponent) {
  // Independent value from 30-digit summation: 2.670407 (see README).
  EXPECT_NEAR(ff::p_series(1.0, 0.5, 1e-12), 2.6704068179663397, 1e-11);
  EXPECT_NEAR(ff::p_series(1.0, 0.5), oracle::p_series(1.0, 0.5), 1e-12);
}

class PSeriesGrid : public ::testing::TestWithParam<std::pair<double, double>> {};

TEST_P(PSeriesGrid, AgreesWithBruteForce) {
  const auto [gamma, beta] = GetParam();
  const double ref = oracle::p_series(gamma, beta);
  EXPECT_NEAR(ff::p_series(gamma, beta), ref, 1e-12 * ref);
  EXPECT_NEAR(ff::p_series_from_one(gamma, beta), ref - 1.0, 1e-12 * ref);
}

INSTANTIATE_TEST_SUITE_P(Rates, PSeriesGrid,
                         ::testing::Values(std::pair{0.5, 1.0}, std::pair{2.0, 1.0},
                                           std::pair{0.5, 0.5}, std::pair{3.0, 0.25},
                                           std::pair{1.5, 0.75}, std::pair{0.25, 0.9}));

TEST(PSeries, TailBoundDominatesTrueTail) {
  for (double beta : {0.25, 0.5, 1.0}) {
    const double gamma = 0.8;
    long double tail = 0;
    for (long j = 41; j < 2000000; ++j) {
      const long double t = std::exp(-gamma * std::pow(static_cast<long double>(j), beta));
      tail += t;
      if (t < 1e-30L) break;
    }
    EXPECT_GE(ff::p_series_tail_bound(gamma, beta, 40.0), static_cast<double>(tail));
  }
}

TEST(PSeries, RejectsNonPositiveRate) {
  EXPECT_THROW(ff::p_series(0.0, 1.0), ff::InvalidArgument);
  EXPECT_THROW(ff::p_series(1.0, 1.5), ff::InvalidArgument);
}

TEST(PowerSeries, MatchesZeta) {
  for (double s : {1.1, 1.5, 2.0, 3.5, 7.0})
    EXPECT_NEAR(ff::power_series_sum(s), oracle::zeta(s), 1e-11 * oracle::zeta(s)) << s;
}
