#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "frameforge/summation.hpp"
#include "frameforge/weights.hpp"

namespace ff = frameforge;

namespace {

ff::CoefficientSequence seq(ff::Index n, double (*fn)(double)) {
  return ff::CoefficientSequence::generate(n, [&](ff::Index k) { return fn(static_cast<double>(k)); });
}

}  // namespace

TEST(Weight, ClosedFormValues) {
  EXPECT_DOUBLE_EQ(ff::eval_weight(ff::Weight::moderate(0.0), 7.0), 1.0);
  EXPECT_DOUBLE_EQ(ff::eval_weight(ff::Weight::moderate(2.0), 3.0), 16.0);
  EXPECT_NEAR(ff::eval_weight(ff::Weight::subexponential(0.5, 1.0), 4.0), std::exp(2.0), 1e-12);
  EXPECT_NEAR(ff::eval_weight(ff::Weight::exponential(0.5), -2.0), std::exp(1.0), 1e-12);
}

TEST(Weight, PositiveAndAtLeastOneOnIndices) {
  const ff::Weight ws[] = {ff::Weight::moderate(3.0), ff::Weight::subexponential(0.25, 2.0),
                           ff::Weight::exponential(0.1)};
  for (const auto& w : ws)
    for (int n = 1; n <= 100; ++n) {
      EXPECT_GT(w(-n * 0.37), 0.0);
      EXPECT_GE(w(n), 1.0);
    }
}

TEST(Weight, RejectsBadParameters) {
  EXPECT_THROW(ff::Weight::moderate(-1.0), ff::InvalidArgument);
  EXPECT_THROW(ff::Weight::subexponential(1.5, 1.0), ff::InvalidArgument);
  EXPECT_THROW(ff::Weight::subexponential(0.0, 1.0), ff::InvalidArgument);
}

TEST(Admissibility, ModerateWeightNeedsNoConstant) {
  const auto grid = ff::lattice_grid(30);
  for (double k : {0.0, 1.0, 2.5})
    EXPECT_LE(ff::verify_weight_admissibility(ff::Weight::moderate(k), grid), 1.0 + 1e-12);
}

TEST(Admissibility, SquareRootExponentIsSubadditive) {
  const auto grid = ff::lattice_grid(20);
  EXPECT_LE(ff::verify_weight_admissibility(ff::Weight::subexponential(0.5, 1.0), grid),
            1.0 + 1e-12);
}

TEST(Admissibility, ExponentialAgainstSubexponentialDiverges) {
  const auto g = ff::admissibility_growth(ff::Weight::exponential(1.0),
                                          ff::Weight::subexponential(0.5, 1.0), 20);
  EXPECT_TRUE(g.diverging);
  EXPECT_GT(g.c_emp_wide, g.c_emp);
  // Brute force on the same lattice: the ratio e^{|t+x|-|x|-|t|^{1/2}}.
  double best = 0.0;
  for (int t = -20; t <= 20; ++t)
    for (int x = -20; x <= 20; ++x)
      best = std::max(best, std::exp(std::abs(t + x) - std::abs(x) - std::sqrt(std::abs(t))));
  EXPECT_NEAR(g.c_emp / best, 1.0, 1e-12);
}

TEST(WeightedNorm, SingleTermAndCounting) {
  EXPECT_NEAR(ff::weighted_norm(ff::CoefficientSequence::delta(10, 1), ff::Weight::moderate(3.0), 2.0),
              8.0, 1e-14);
  const auto ones = ff::CoefficientSequence::generate(10, [](ff::Index n) { return n <= 3 ? 1.0 : 0.0; });
  EXPECT_DOUBLE_EQ(ff::weighted_norm(ones, ff::Weight::moderate(0.0), 1.0), 3.0);
}

TEST(WeightedNorm, SupAttainedAtFirstIndex) {
  const auto c = seq(100, [](double n) { return 1.0 / (n * n); });
  EXPECT_DOUBLE_EQ(ff::weighted_norm(c, ff::Weight::moderate(1.0), 
                                     std::numeric_limits<double>::infinity()), 2.0);
}

TEST(WeightedNorm, UnitWeightL2IsEuclidean) {
  const auto c = seq(50, [](double n) { return std::sin(n) / n; });
  EXPECT_EQ(ff::weighted_norm(c, ff::Weight::moderate(0.0), 2.0), c.values().norm());
}

TEST(WeightedNorm, MatchesDirectSumForGeneralP) {
  const auto c = seq(40, [](double n) { return std::cos(n) * std::exp(-0.1 * n); });
  const ff::Weight w = ff::Weight::subexponential(0.5, 0.7);
  for (double p : {1.0, 1.5, 3.0}) {
    long double s = 0;
    for (int n = 1; n <= 40; ++n) s += std::pow(std::abs(c(n)) * w(n), p);
    EXPECT_NEAR(ff::weighted_norm(c, w, p), std::pow(static_cast<double>(s), 1.0 / p), 1e-12);
  }
}

TEST(WeightedNorm, HugeWeightsStayFinite) {
  // e^{800 n} overflows directly; the terms e^{-1000 n} e^{800 n} do not.
  const auto c = ff::CoefficientSequence::generate(5, [](ff::Index n) { return std::exp(-300.0 * n); });
  const double v = ff::weighted_norm(c, ff::Weight::exponential(200.0), 2.0);
  EXPECT_TRUE(std::isfinite(v));
  EXPECT_NEAR(v / std::exp(-100.0), std::sqrt(1.0 + std::exp(-200.0)), 1e-12);
}

TEST(SupGradedNorm, Examples) {
  EXPECT_DOUBLE_EQ(ff::sup_graded_norm(ff::CoefficientSequence::delta(8, 1), ff::NormFamily::poly(), 5.0), 1.0);
  const auto geo = seq(50, [](double n) { return std::exp(-2.0 * n); });
  EXPECT_NEAR(ff::sup_graded_norm(geo, ff::NormFamily::subexp(1.0), 1.0), std::exp(-1.0), 1e-15);
  const auto cube = seq(200, [](double n) { return 1.0 / (n * n * n); });
  EXPECT_DOUBLE_EQ(ff::sup_graded_norm(cube, ff::NormFamily::poly(), 2.0), 1.0);
}

TEST(SupGradedNorm, RangeRestriction) {
  const auto c = seq(20, [](double n) { return 1.0 / n; });
  EXPECT_NEAR(ff::sup_graded_norm(c, ff::NormFamily::poly(), 0.0, 5, 20), 0.2, 1e-15);
}

TEST(KahanSum, RecoversCancelledMass) {
  ff::KahanSum s;
  s += 1.0;
  for (int i = 0; i < 1000; ++i) s += 1e-16;
  s += -1.0;
  // The compensation itself is a plain double sum of 1000 terms.
  EXPECT_NEAR(s.value(), 1e-13, 1e-25);
}

TEST(LpFromLogs, MatchesDirect) {
  const std::vector<double> logs = {std::log(3.0), std::log(4.0),
                                    -std::numeric_limits<double>::infinity()};
  EXPECT_NEAR(ff::lp_norm_from_logs(logs, 2.0), 5.0, 1e-14);
  EXPECT_NEAR(ff::lp_norm_from_logs(logs, std::numeric_limits<double>::infinity()), 4.0, 1e-14);
}
