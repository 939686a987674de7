#pragma once

namespace frameforge {

/// Upper bound on sum_{j > J} exp(-gamma j^beta) from the integral
/// int_J^inf exp(-gamma x^beta) dx.
double p_series_tail_bound(double gamma, double beta, double from);

/// P_{gamma,beta} = sum_{j >= 0} exp(-gamma j^beta), summed until the tail
/// bound drops below `tol`.
double p_series(double gamma, double beta, double tol = 1e-13);

/// sum_{n >= 1} exp(-gamma n^beta) = P_{gamma,beta} - 1.
double p_series_from_one(double gamma, double beta, double tol = 1e-13);

/// sum_{n >= 1} n^{-s} for s > 1: explicit head plus the integral tail with
/// Euler-Maclaurin corrections, accurate to `tol`.
double power_series_sum(double s, double tol = 1e-12);

}  // namespace frameforge
