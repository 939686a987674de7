#include "frameforge/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace frameforge {

KahanSum& KahanSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x))
    compensation_ += (sum_ - t) + x;
  else
    compensation_ += (x - t) + sum_;
  sum_ = t;
  return *this;
}

double lp_norm_from_logs(std::span<const double> log_terms, double p) {
  const double ninf = -std::numeric_limits<double>::infinity();
  double lmax = ninf;
  for (double l : log_terms) lmax = std::max(lmax, l);
  if (lmax == ninf) return 0.0;
  if (std::isinf(p)) return std::exp(lmax);

  KahanSum acc;
  for (double l : log_terms)
    if (l != ninf) acc += std::exp(p * (l - lmax));
  // log of the result; exp may legitimately overflow to +inf.
  return std::exp(lmax + std::log(acc.value()) / p);
}

}  // namespace frameforge
