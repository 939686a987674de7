#pragma once

#include <span>

namespace frameforge {

/// Compensated (Neumaier) accumulator.
class KahanSum {
 public:
  KahanSum& add(double x);
  KahanSum& operator+=(double x) { return add(x); }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// (sum_i exp(p * log_terms[i]))^{1/p} evaluated without overflow. Entries
/// equal to -inf contribute nothing. p = +inf returns exp(max log term).
double lp_norm_from_logs(std::span<const double> log_terms, double p);

}  // namespace frameforge
