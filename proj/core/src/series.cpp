#include "frameforge/series.hpp"

#include <array>
#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "frameforge/summation.hpp"
#include "frameforge/types.hpp"

namespace frameforge {

namespace {

void check_rate(double gamma, double beta) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw InvalidArgument("series rate must be positive");
  if (!(beta > 0.0 && beta <= 1.0)) throw InvalidArgument("series beta must lie in (0, 1]");
}

}  // namespace

double p_series_tail_bound(double gamma, double beta, double from) {
  check_rate(gamma, beta);
  if (from < 0.0) from = 0.0;
  const double a = 1.0 / beta;
  const double x = gamma * std::pow(from, beta);
  // int_J^inf e^{-gamma x^beta} dx = Gamma(1/beta, gamma J^beta) / (beta gamma^{1/beta})
  const double log_scale = -std::log(beta) - a * std::log(gamma);
  const double q = boost::math::gamma_q(a, x);  // regularized upper incomplete gamma
  if (q == 0.0) return 0.0;
  return std::exp(std::log(q) + std::lgamma(a) + log_scale);
}

double p_series(double gamma, double beta, double tol) {
  check_rate(gamma, beta);
  if (!(tol > 0.0)) throw InvalidArgument("series tolerance must be positive");
  double last = 16.0;
  while (p_series_tail_bound(gamma, beta, last) >= tol) {
    last *= 2.0;
    if (last > 4.0e9) throw InvalidArgument("series converges too slowly for the tolerance");
  }
  KahanSum acc;
  const auto terms = static_cast<long long>(last);
  for (long long j = 0; j <= terms; ++j)
    acc += std::exp(-gamma * std::pow(static_cast<double>(j), beta));
  return acc.value();
}

double p_series_from_one(double gamma, double beta, double tol) {
  return p_series(gamma, beta, tol) - 1.0;
}

double power_series_sum(double s, double tol) {
  if (!(s > 1.0)) throw InvalidArgument("power series needs exponent s > 1");
  constexpr int kHead = 32;
  KahanSum acc;
  for (int n = 1; n < kHead; ++n) acc += std::pow(static_cast<double>(n), -s);

  const double j = kHead;
  acc += std::pow(j, 1.0 - s) / (s - 1.0);
  acc += 0.5 * std::pow(j, -s);

  // B_{2k} / (2k)!
  constexpr std::array<double, 7> kBernoulliOverFactorial = {
      1.0 / 6.0 / 2.0,
      -1.0 / 30.0 / 24.0,
      1.0 / 42.0 / 720.0,
      -1.0 / 30.0 / 40320.0,
      5.0 / 66.0 / 3628800.0,
      -691.0 / 2730.0 / 479001600.0,
      7.0 / 6.0 / 87178291200.0,
  };
  // rising factorial s (s+1) ... (s+2k-2) times J^{-s-2k+1}
  double rising = s;
  double jpow = std::pow(j, -s - 1.0);
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    const double term = kBernoulliOverFactorial[k] * rising * jpow;
    acc += term;
    if (std::abs(term) < 1e-3 * tol) break;
    rising *= (s + 2.0 * k + 1.0) * (s + 2.0 * k + 2.0);
    jpow /= j * j;
  }
  return acc.value();
}

}  // namespace frameforge
