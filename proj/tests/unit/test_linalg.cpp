#include <gtest/gtest.h>

#include "frameforge/linalg.hpp"
#include "oracles.hpp"

namespace ff = frameforge;

TEST(SpectralNorm, DenseAgreesWithJacobi) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const ff::Matrix a = oracle::random_matrix(s, 40, true);
    EXPECT_NEAR(ff::spectral_norm(a), oracle::spectral_norm(a), 1e-12 * oracle::spectral_norm(a));
  }
}

TEST(SpectralNorm, PowerIterationOnLargeMatrix) {
  // Clustered top spectrum: the capped iteration stops short, from below.
  const ff::Matrix a = oracle::tridiagonal(300, 0.3, 1.0, 0.3);
  const double ref = oracle::spectral_norm(a);
  const double est = ff::spectral_norm(a);
  EXPECT_LE(est, ref * (1 + 1e-14));
  EXPECT_NEAR(est, ref, 1e-5 * ref);
  ff::PowerIteration forced;
  forced.dense_below = 0;
  const ff::Matrix r = oracle::random_matrix(9, 60);
  EXPECT_NEAR(ff::spectral_norm(r, forced), oracle::spectral_norm(r), 1e-6 * oracle::spectral_norm(r));
}

TEST(SpectralNorm, HermitianAndSingularValues) {
  const ff::Matrix b = oracle::random_matrix(3, 30, true);
  const ff::Matrix h = b * b.adjoint();
  EXPECT_NEAR(ff::spectral_norm_hermitian(h), oracle::spectral_norm(b) * oracle::spectral_norm(b), 1e-10);
  const auto sv = ff::singular_values(b);
  EXPECT_NEAR(sv(sv.size() - 1), oracle::min_singular_value(b), 1e-12);
  for (ff::Index i = 1; i < sv.size(); ++i) EXPECT_GE(sv(i - 1), sv(i));
}

TEST(SpectralNorm, ZeroMatrix) {
  EXPECT_EQ(ff::spectral_norm(ff::Matrix::Zero(300, 300)), 0.0);
}
