#include <gtest/gtest.h>

#include <cmath>

#include "frameforge/hermite.hpp"
#include "oracles.hpp"

namespace ff = frameforge;

namespace {

const ff::HermiteContext& ctx() {
  static const ff::HermiteContext c(256);
  return c;
}

}  // namespace

TEST(HermiteEval, GroundStateAndParity) {
  EXPECT_NEAR(ff::hermite_eval(ctx(), 1, 0.0), std::pow(oracle::kPi, -0.25), 1e-15);
  EXPECT_EQ(ff::hermite_eval(ctx(), 2, 0.0), 0.0);
  EXPECT_NEAR(ff::hermite_eval(ctx(), 4, 1.3), -ff::hermite_eval(ctx(), 4, -1.3), 1e-15);
}

TEST(HermiteEval, AgreesWithMultiprecisionRecurrence) {
  for (ff::Index n : {1, 2, 7, 40, 128, 256})
    for (double x : {-3.1, 0.4, 2.0, 9.5, 21.0}) {
      const double ref = oracle::hermite(n, x);
      EXPECT_NEAR(ff::hermite_eval(ctx(), n, x), ref, 1e-12 + 1e-10 * std::abs(ref)) << n << " " << x;
    }
}

TEST(HermiteEval, FarTailUnderflowsGracefully) {
  const auto v = ff::hermite_values(300, 45.0);
  for (ff::Index i = 0; i < v.size(); ++i) EXPECT_TRUE(std::isfinite(v[i]));
  EXPECT_NEAR(v[299], oracle::hermite(300, 45.0), 1e-300 + 1e-9 * std::abs(oracle::hermite(300, 45.0)));
}

TEST(Quadrature, NodesSymmetricAndWeightsPositive) {
  const auto& x = ctx().nodes();
  for (ff::Index i = 0; i < x.size(); ++i) EXPECT_EQ(x[i], -x[x.size() - 1 - i]);
  const auto w = ctx().classical_weights();
  EXPECT_NEAR(w.sum(), std::sqrt(oracle::kPi), 1e-12);
  EXPECT_GT(ctx().function_weights().minCoeff(), 0.0);
}

TEST(Quadrature, GramIsIdentity) {
  const auto& b = ctx().basis_at_nodes();
  const auto& w = ctx().function_weights();
  const Eigen::MatrixXd g = b.leftCols(64).transpose() * w.asDiagonal() * b.leftCols(64);
  EXPECT_LT((g - Eigen::MatrixXd::Identity(64, 64)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Project, HermiteComboIsExact) {
  ff::HermiteCombo h3{{0.0, 0.0, 1.0}};
  const auto c = ff::project(ctx(), h3, 16);
  for (ff::Index n = 1; n <= 16; ++n) EXPECT_EQ(c(n), ff::Complex(n == 3 ? 1.0 : 0.0));
}

TEST(Project, GaussianOneIsGroundState) {
  const auto c = ff::project(ctx(), ff::Gaussian{1.0}, 64);
  EXPECT_NEAR(c(1).real(), std::pow(oracle::kPi, 0.25), 1e-10);
  for (ff::Index n = 2; n <= 64; ++n) EXPECT_LT(std::abs(c(n)), 1e-10);
}

TEST(Project, GaussianThreeParityAndParseval) {
  const auto c = ff::project(ctx(), ff::Gaussian{3.0}, 64);
  for (ff::Index n = 2; n <= 64; n += 2) EXPECT_LT(std::abs(c(n)), 1e-14);
  EXPECT_NEAR(c.values().squaredNorm(), std::sqrt(oracle::kPi / 3.0), 1e-8);
  EXPECT_NEAR(*ff::l2_norm_squared(ff::Gaussian{3.0}), std::sqrt(oracle::kPi / 3.0), 1e-15);
  // Closed form for a = 3: |<f, h_{2j+3}>| / |<f, h_{2j+1}>| = sqrt((2j+1)/(2j+2)) / 2.
  for (ff::Index j = 0; j < 10; ++j)
    EXPECT_NEAR(std::abs(c(2 * j + 3) / c(2 * j + 1)), std::sqrt((2.0 * j + 1) / (2.0 * j + 2)) / 2.0, 1e-10);
}

TEST(Project, SampledMatchesAnalyticOnFineGrid) {
  const int pts = 40001;
  ff::Sampled s;
  for (int i = 0; i < pts; ++i) {
    const double x = -40.0 + 80.0 * i / (pts - 1);
    s.grid.push_back(x);
    s.values.push_back(std::exp(-1.5 * x * x));
  }
  const auto a = ff::project(ctx(), s, 32);
  const auto b = ff::project(ctx(), ff::Gaussian{3.0}, 32);
  EXPECT_LT((a.values() - b.values()).cwiseAbs().maxCoeff(), 1e-5);
}

TEST(Project, Validation) {
  EXPECT_THROW(ff::project(ctx(), ff::Gaussian{-1.0}, 8), ff::InvalidArgument);
  EXPECT_THROW(ff::project(ctx(), ff::Gaussian{1.0}, 1000), ff::InvalidArgument);
  ff::Sampled narrow{{-1.0, 0.0, 1.0}, {0.0, 1.0, 0.0}};
  EXPECT_THROW(ff::project(ctx(), narrow, 8), ff::InvalidArgument);
  ff::Sampled unsorted{{-30.0, 1.0, 0.0, 30.0}, {0.0, 1.0, 1.0, 0.0}};
  EXPECT_THROW(ff::project(ctx(), unsorted, 8), ff::InvalidArgument);
}

TEST(Classify, FinitelySupported) {
  const auto r = ff::classify_coefficient_decay(ff::CoefficientSequence::delta(64, 1));
  EXPECT_EQ(r.poly_order, ff::kMaxPolyOrder);
  for (const auto& f : r.subexp) EXPECT_TRUE(std::isinf(f.gamma));
}

TEST(Classify, GeometricAndPowerLaw) {
  const auto geo = ff::classify_coefficient_decay(
      ff::CoefficientSequence::generate(64, [](ff::Index n) { return std::exp(-double(n)); }));
  ASSERT_FALSE(geo.subexp.empty());
  EXPECT_DOUBLE_EQ(geo.subexp.back().beta, 1.0);
  EXPECT_NEAR(geo.subexp.back().gamma, 1.0, 1e-3);

  const auto quartic = ff::classify_coefficient_decay(
      ff::CoefficientSequence::generate(256, [](ff::Index n) { return std::pow(double(n), -4.0); }));
  EXPECT_EQ(quartic.poly_order, 3);
  EXPECT_TRUE(ff::poly_level_stable(
      ff::CoefficientSequence::generate(256, [](ff::Index n) { return std::pow(double(n), -4.0); }), 3.0));
}
