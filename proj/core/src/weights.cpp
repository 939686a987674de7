#include "frameforge/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "frameforge/summation.hpp"

namespace frameforge {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double safe_log_abs(Complex z) {
  const double a = std::abs(z);
  return a > 0.0 ? std::log(a) : kNegInf;
}

}  // namespace

Weight::Weight(WeightKind kind, double k, double beta, double gamma, double c)
    : kind_(kind), k_(k), beta_(beta), gamma_(gamma), c_(c) {
  if (!(c_ > 0.0)) throw InvalidArgument("weight constant C must be positive");
}

Weight Weight::moderate(double k, double c) {
  if (!(k >= 0.0) || !std::isfinite(k)) throw InvalidArgument("moderate weight needs k >= 0");
  return Weight(WeightKind::moderate, k, 1.0, 0.0, c);
}

Weight Weight::subexponential(double beta, double gamma, double c) {
  if (!(beta > 0.0 && beta <= 1.0)) throw InvalidArgument("weight beta must lie in (0, 1]");
  if (!(gamma > 0.0)) throw InvalidArgument("weight gamma must be positive");
  return Weight(WeightKind::subexponential, 0.0, beta, gamma, c);
}

Weight Weight::exponential(double gamma, double c) {
  if (!(gamma > 0.0)) throw InvalidArgument("weight gamma must be positive");
  return Weight(WeightKind::exponential, 0.0, 1.0, gamma, c);
}

double Weight::log_value(double x) const {
  const double ax = std::abs(x);
  switch (kind_) {
    case WeightKind::moderate:
      return k_ == 0.0 ? 0.0 : k_ * std::log1p(ax);
    case WeightKind::subexponential:
      return gamma_ * std::pow(ax, beta_);
    case WeightKind::exponential:
      return gamma_ * ax;
  }
  return 0.0;
}

double Weight::operator()(double x) const {
  if (kind_ == WeightKind::moderate) return std::pow(1.0 + std::abs(x), k_);
  return std::exp(log_value(x));
}

double Weight::log_shift_envelope(double t) const { return log_value(t); }

double eval_weight(const Weight& w, double x) { return w(x); }

std::vector<GridPoint> lattice_grid(int radius) {
  std::vector<GridPoint> grid;
  grid.reserve(static_cast<std::size_t>((2 * radius + 1) * (2 * radius + 1)));
  for (int t = -radius; t <= radius; ++t)
    for (int x = -radius; x <= radius; ++x) grid.emplace_back(t, x);
  return grid;
}

double verify_weight_admissibility(const Weight& w, std::span<const GridPoint> grid) {
  return verify_weight_admissibility(w, w, grid);
}

double verify_weight_admissibility(const Weight& w, const Weight& declared,
                                   std::span<const GridPoint> grid) {
  if (grid.empty()) throw InvalidArgument("admissibility grid is empty");
  double best = kNegInf;
  for (const auto& [t, x] : grid) {
    const double log_ratio =
        w.log_value(t + x) - declared.log_shift_envelope(t) - w.log_value(x);
    best = std::max(best, log_ratio);
  }
  return std::exp(best);
}

AdmissibilityGrowth admissibility_growth(const Weight& w, const Weight& declared, int radius) {
  const auto narrow = lattice_grid(radius);
  const auto wide = lattice_grid(2 * radius);
  AdmissibilityGrowth g;
  g.c_emp = verify_weight_admissibility(w, declared, narrow);
  g.c_emp_wide = verify_weight_admissibility(w, declared, wide);
  g.diverging = g.c_emp_wide >= 1.5 * g.c_emp;
  return g;
}

double weighted_norm(const CoefficientSequence& c, const Weight& w, double p) {
  if (!(p >= 1.0)) throw InvalidArgument("weighted_norm needs p >= 1 or p = inf");
  std::vector<double> logs(static_cast<std::size_t>(c.size()));
  double lmax = kNegInf;
  double lmin = std::numeric_limits<double>::infinity();
  double lw_max = kNegInf;
  bool unit = true;
  for (Index n = 1; n <= c.size(); ++n) {
    const double lw = w.log_value(static_cast<double>(n));
    unit = unit && lw == 0.0;
    const double l = safe_log_abs(c(n)) + lw;
    logs[n - 1] = l;
    lmax = std::max(lmax, l);
    if (l != kNegInf) {
      lmin = std::min(lmin, l);
      lw_max = std::max(lw_max, lw);
    }
  }
  if (lmax == kNegInf) return 0.0;
  if (unit && p == 2.0) return c.values().norm();

  // Direct accumulation when every weight and every |c_n|^p mu(n)^p is
  // comfortably representable; zero entries are skipped.
  const double reach = std::isinf(p) ? 1.0 : p;
  if (lw_max < 600.0 && reach * lmax < 600.0 && reach * lmin > -600.0) {
    if (std::isinf(p)) {
      double best = 0.0;
      for (Index n = 1; n <= c.size(); ++n)
        if (logs[n - 1] != kNegInf)
          best = std::max(best, std::abs(c(n)) * w(static_cast<double>(n)));
      return best;
    }
    KahanSum acc;
    for (Index n = 1; n <= c.size(); ++n) {
      if (logs[n - 1] == kNegInf) continue;
      const double t = std::abs(c(n)) * w(static_cast<double>(n));
      acc += p == 1.0 ? t : (p == 2.0 ? t * t : std::pow(t, p));
    }
    return p == 1.0 ? acc.value() : (p == 2.0 ? std::sqrt(acc.value())
                                              : std::pow(acc.value(), 1.0 / p));
  }
  return lp_norm_from_logs(logs, p);
}

NormFamily NormFamily::subexp(double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) throw InvalidArgument("family beta must lie in (0, 1]");
  return {Kind::subexp, beta};
}

double NormFamily::log_weight(Index n, double k) const {
  const double x = static_cast<double>(n);
  if (k == 0.0) return 0.0;
  return kind == Kind::poly ? k * std::log(x) : k * std::pow(x, beta);
}

double sup_graded_norm(const CoefficientSequence& c, const NormFamily& family, double k) {
  return sup_graded_norm(c, family, k, 1, c.size());
}

double sup_graded_norm(const CoefficientSequence& c, const NormFamily& family, double k,
                       Index first, Index last) {
  if (!(k >= 0.0)) throw InvalidArgument("graded norm level must be nonnegative");
  double best = kNegInf;
  for (Index n = std::max<Index>(first, 1); n <= std::min(last, c.size()); ++n)
    best = std::max(best, safe_log_abs(c(n)) + family.log_weight(n, k));
  return best == kNegInf ? 0.0 : std::exp(best);
}

}  // namespace frameforge
