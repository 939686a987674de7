#pragma once

// Reference computations that share no code with the library: plain loops,
// extended or multiprecision arithmetic, and a different SVD.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Dense>
#include <boost/math/special_functions/zeta.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "frameforge/types.hpp"

namespace oracle {

using frameforge::Complex;
using frameforge::Index;
using frameforge::Matrix;

inline const double kPi = 3.14159265358979323846;

/// sum_{j>=0} e^{-g j^b} in long double, stopping once terms drop below 1e-24
/// and the sequence is past its (monotone) start.
inline double p_series(double gamma, double beta) {
  long double s = 0.0L;
  for (long j = 0;; ++j) {
    const long double t = std::exp(-static_cast<long double>(gamma) *
                                   std::pow(static_cast<long double>(j), beta));
    s += t;
    if (t < 1e-24L) break;
  }
  return static_cast<double>(s);
}

inline double zeta(double s) { return boost::math::zeta(s); }

/// Orthonormal Hermite function h_n (1-based) at x in 50-digit arithmetic.
inline double hermite(Index n, double x) {
  using boost::multiprecision::cpp_bin_float_50;
  const cpp_bin_float_50 xx(x);
  const cpp_bin_float_50 pi = boost::math::constants::pi<cpp_bin_float_50>();
  cpp_bin_float_50 prev = 0;
  cpp_bin_float_50 cur = pow(pi, cpp_bin_float_50(-0.25)) * exp(-xx * xx / 2);
  for (Index k = 0; k + 1 < n; ++k) {
    const cpp_bin_float_50 next =
        sqrt(cpp_bin_float_50(2) / (k + 1)) * xx * cur - sqrt(cpp_bin_float_50(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return static_cast<double>(cur);
}

inline double spectral_norm(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

inline double min_singular_value(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

inline Matrix random_matrix(std::uint64_t seed, Index n, bool complex = false) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix a(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) a(i, j) = Complex(u(rng), complex ? u(rng) : 0.0);
  return a;
}

/// Schur test bound computed directly from row and column sums.
inline double schur(const Matrix& a, double p) {
  double k1 = 0.0, k2 = 0.0;
  for (Index i = 0; i < a.rows(); ++i) k1 = std::max(k1, a.row(i).cwiseAbs().sum());
  for (Index j = 0; j < a.cols(); ++j) k2 = std::max(k2, a.col(j).cwiseAbs().sum());
  if (std::isinf(p)) return k1;
  if (p == 1.0) return k2;
  return std::pow(k1, 1.0 - 1.0 / p) * std::pow(k2, 1.0 / p);
}

/// max_{m,n} |A_mn| / env(m, n) over logical indices 1..last.
template <class Env>
double max_ratio(const Matrix& a, Index last, Env&& env) {
  double best = 0.0;
  for (Index m = 1; m <= last; ++m)
    for (Index n = 1; n <= last; ++n) best = std::max(best, std::abs(a(m - 1, n - 1)) / env(m, n));
  return best;
}

inline Matrix exponential_matrix(Index n, double gamma, double beta = 1.0) {
  Matrix a(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      a(i, j) = std::exp(-gamma * std::pow(std::abs(static_cast<double>(i - j)), beta));
  return a;
}

inline Matrix tridiagonal(Index n, double lo, double mid, double hi) {
  Matrix a = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    a(i, i) = mid;
    if (i > 0) a(i, i - 1) = lo;
    if (i + 1 < n) a(i, i + 1) = hi;
  }
  return a;
}

/// Rows e_n = h_n + a h_{n+1}, truncated at N.
inline Matrix shift_basis(Index n, double a) {
  Matrix e = Matrix::Identity(n, n);
  for (Index i = 0; i + 1 < n; ++i) e(i, i + 1) = a;
  return e;
}

}  // namespace oracle
