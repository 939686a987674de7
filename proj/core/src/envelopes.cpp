#include "frameforge/envelopes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "frameforge/random.hpp"
#include "frameforge/series.hpp"
#include "frameforge/summation.hpp"

namespace frameforge {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kInf = std::numeric_limits<double>::infinity();
// Below this, a plain ratio |a| / env could lose precision; go through logs.
constexpr double kSafeFloor = 1e-290;

constexpr std::array<std::pair<EnvelopeKind, std::string_view>, 9> kNames = {{
    {EnvelopeKind::poly_star, "poly_star"},
    {EnvelopeKind::poly_dstar, "poly_dstar"},
    {EnvelopeKind::poly_tstar, "poly_tstar"},
    {EnvelopeKind::colrow_poly, "colrow_poly"},
    {EnvelopeKind::colrow_subexp, "colrow_subexp"},
    {EnvelopeKind::grdecay, "grdecay"},
    {EnvelopeKind::eq_newdecay, "eq_newdecay"},
    {EnvelopeKind::subexp_split, "subexp_split"},
    {EnvelopeKind::jaffard, "jaffard"},
}};

double log_or_neg_inf(double x) { return x > 0.0 ? std::log(x) : kNegInf; }

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

bool beta_ok(double b) { return b > 0.0 && b <= 1.0; }

Eigen::MatrixXd abs_entries(const TruncatedMatrix& a) { return a.entries().cwiseAbs(); }

DecayFit regress(const std::vector<double>& xs, const std::vector<double>& ys) {
  const auto k = static_cast<double>(xs.size());
  KahanSum sx, sy;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx.value() / k;
  const double my = sy.value() / k;
  KahanSum sxx, sxy;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const double slope = sxy.value() / sxx.value();
  const double intercept = my - slope * mx;
  DecayFit fit;
  fit.gamma = std::max(0.0, -slope);
  fit.c = std::exp(intercept);
  fit.usable = static_cast<Index>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    fit.residual = std::max(fit.residual, std::abs(ys[i] - (intercept + slope * xs[i])));
  return fit;
}

template <class Abscissa>
DecayFit fit_antidiagonals(const TruncatedMatrix& a, Abscissa&& abscissa) {
  const Index n = a.size();
  if (n < 16) throw InvalidArgument("decay fit needs N >= 16");
  const Index w = a.window_end();
  const Index d_max = n - 2 * a.margin() - 1;
  const Eigen::MatrixXd abs = abs_entries(a);

  std::vector<double> xs, ys;
  for (Index d = 1; d <= d_max; ++d) {
    double peak = 0.0;
    for (Index m = 0; m + d < w; ++m) peak = std::max({peak, abs(m, m + d), abs(m + d, m)});
    if (peak < 1e-300) continue;
    xs.push_back(abscissa(static_cast<double>(d)));
    ys.push_back(std::log(peak));
  }
  if (xs.empty()) {
    DecayFit fit;
    fit.gamma = kInf;
    for (Index m = 0; m < w; ++m) fit.c = std::max(fit.c, abs(m, m));
    return fit;
  }
  if (xs.size() < 3) throw InvalidArgument("fewer than 3 usable anti-diagonals");
  return regress(xs, ys);
}

}  // namespace

std::string_view to_string(EnvelopeKind kind) {
  for (const auto& [k, name] : kNames)
    if (k == kind) return name;
  return "unknown";
}

EnvelopeKind envelope_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  throw InvalidArgument("unknown envelope kind '" + std::string(name) + "'");
}

DecayEnvelope DecayEnvelope::poly_star(double gamma, double c) {
  DecayEnvelope e{.kind = EnvelopeKind::poly_star, .gamma = gamma, .c = c};
  e.validate();
  return e;
}

DecayEnvelope DecayEnvelope::poly_dstar(double gamma, double c) {
  DecayEnvelope e{.kind = EnvelopeKind::poly_dstar, .gamma = gamma, .c = c};
  e.validate();
  return e;
}

DecayEnvelope DecayEnvelope::poly_tstar(double gamma, double c) {
  DecayEnvelope e{.kind = EnvelopeKind::poly_tstar, .gamma = gamma, .c = c};
  e.validate();
  return e;
}

DecayEnvelope DecayEnvelope::colrow_poly(double gamma0, double gamma1, double c0, double c1) {
  DecayEnvelope e{.kind = EnvelopeKind::colrow_poly, .gamma0 = gamma0, .gamma1 = gamma1,
                  .c0 = c0, .c1 = c1};
  e.validate();
  return e;
}

DecayEnvelope DecayEnvelope::colrow_subexp(double beta, double gamma0, double gamma1,
                                           double c0, double c1) {
  DecayEnvelope e{.kind = EnvelopeKind::colrow_subexp, .gamma0 = gamma0, .gamma1 = gamma1,
                  .beta = beta, .c0 = c0, .c1 = c1};
  e.validate();
  return e;
}

DecayEnvelope DecayEnvelope::grdecay(double gamma1, double eps, double c) {
  DecayEnvelope e{.kind = EnvelopeKind::grdecay, .gamma1 = gamma1, .eps = eps, .c = c};
  e.validate();
  return e;
}

DecayEnvelope DecayEnvelope::eq_newdecay(double gamma1, double eps, double c0, double c1) {
  DecayEnvelope e{.kind = EnvelopeKind::eq_newdecay, .gamma1 = gamma1, .eps = eps,
                  .c0 = c0, .c1 = c1};
  e.validate();
  return e;
}

DecayEnvelope DecayEnvelope::subexp_split(double beta, double gamma1, double eps, double c0,
                                          double c1) {
  DecayEnvelope e{.kind = EnvelopeKind::subexp_split, .gamma1 = gamma1, .beta = beta,
                  .eps = eps, .c0 = c0, .c1 = c1};
  e.validate();
  return e;
}

DecayEnvelope DecayEnvelope::jaffard(double gamma, double beta, double c) {
  DecayEnvelope e{.kind = EnvelopeKind::jaffard, .gamma = gamma, .beta = beta, .c = c};
  e.validate();
  return e;
}

void DecayEnvelope::validate() const {
  require(c >= 0.0 && c0 >= 0.0 && c1 >= 0.0, "envelope constants must be nonnegative");
  switch (kind) {
    case EnvelopeKind::poly_star:
    case EnvelopeKind::poly_dstar:
    case EnvelopeKind::poly_tstar:
      require(gamma > 0.0, "envelope gamma must be positive");
      break;
    case EnvelopeKind::colrow_poly:
      require(gamma0 >= 0.0 && gamma1 > 0.0, "colrow_poly needs gamma0 >= 0, gamma1 > 0");
      break;
    case EnvelopeKind::colrow_subexp:
      require(beta_ok(beta), "envelope beta must lie in (0, 1]");
      require(gamma0 >= 0.0 && gamma1 > 0.0, "colrow_subexp needs gamma0 >= 0, gamma1 > 0");
      break;
    case EnvelopeKind::grdecay:
    case EnvelopeKind::eq_newdecay:
      require(gamma1 > 0.0 && eps > 0.0, "envelope needs gamma1 > 0, eps > 0");
      break;
    case EnvelopeKind::subexp_split:
      require(beta_ok(beta), "envelope beta must lie in (0, 1]");
      require(gamma1 > 0.0 && eps > 0.0, "envelope needs gamma1 > 0, eps > 0");
      break;
    case EnvelopeKind::jaffard:
      require(beta_ok(beta), "envelope beta must lie in (0, 1]");
      require(gamma > 0.0, "envelope gamma must be positive");
      break;
  }
}

DecayEnvelope DecayEnvelope::unit() const {
  DecayEnvelope e = *this;
  e.c = e.c0 = e.c1 = 1.0;
  return e;
}

double DecayEnvelope::log_value(Index mi, Index ni) const {
  const double m = static_cast<double>(mi);
  const double n = static_cast<double>(ni);
  const double lo = std::min(m, n);
  const double hi = std::max(m, n);
  const double d = hi - lo;
  const bool upper = ni > mi;
  switch (kind) {
    case EnvelopeKind::poly_star:
      return log_or_neg_inf(c) + gamma * std::log1p(lo) - 2.0 * gamma * std::log1p(hi);
    case EnvelopeKind::poly_dstar:
      return log_or_neg_inf(c) - gamma * std::log1p(d);
    case EnvelopeKind::poly_tstar:
      return log_or_neg_inf(c) + gamma * (std::log(lo) - std::log(hi));
    case EnvelopeKind::colrow_poly:
      return upper ? log_or_neg_inf(c0) + gamma0 * std::log(n)
                   : log_or_neg_inf(c1) + gamma1 * (std::log(n) - std::log(m));
    case EnvelopeKind::colrow_subexp:
      return upper ? log_or_neg_inf(c0) + gamma0 * std::pow(n, beta)
                   : log_or_neg_inf(c1) - gamma1 * (std::pow(m, beta) - std::pow(n, beta));
    case EnvelopeKind::grdecay:
      return log_or_neg_inf(c) - (gamma1 + 1.0 + eps) * std::log1p(d);
    case EnvelopeKind::eq_newdecay:
      return upper ? log_or_neg_inf(c0) - (1.0 + eps) * std::log(n)
                   : log_or_neg_inf(c1) + gamma1 * std::log(n) -
                         (gamma1 + 1.0 + eps) * std::log(m);
    case EnvelopeKind::subexp_split:
      return upper ? log_or_neg_inf(c0) - eps * std::pow(n, beta)
                   : log_or_neg_inf(c1) + gamma1 * std::pow(n, beta) -
                         (gamma1 + eps) * std::pow(m, beta);
    case EnvelopeKind::jaffard:
      return log_or_neg_inf(c) - gamma * std::pow(d, beta);
  }
  return kNegInf;
}

double DecayEnvelope::value(Index mi, Index ni) const {
  const double m = static_cast<double>(mi);
  const double n = static_cast<double>(ni);
  const double lo = std::min(m, n);
  const double hi = std::max(m, n);
  const double d = hi - lo;
  const bool upper = ni > mi;
  // Direct formulas, so that a matrix built from the same expression is
  // reproduced bit for bit.
  switch (kind) {
    case EnvelopeKind::poly_dstar:
      return c * std::pow(1.0 + d, -gamma);
    case EnvelopeKind::poly_tstar:
      return c * std::pow(lo / hi, gamma);
    case EnvelopeKind::grdecay:
      return c * std::pow(1.0 + d, -(gamma1 + 1.0 + eps));
    case EnvelopeKind::colrow_poly:
      return upper ? c0 * std::pow(n, gamma0) : c1 * std::pow(n / m, gamma1);
    case EnvelopeKind::jaffard:
      return c * std::exp(-gamma * std::pow(d, beta));
    default:
      return std::exp(log_value(mi, ni));
  }
}

double envelope_value(const DecayEnvelope& env, Index m, Index n) { return env.value(m, n); }

CoefficientSequence apply_matrix(const TruncatedMatrix& a, const CoefficientSequence& c) {
  if (a.size() != c.size()) throw InvalidArgument("dimension mismatch");
  return CoefficientSequence(Vector(a.entries() * c.values()));
}

double membership_constant(const TruncatedMatrix& a, const DecayEnvelope& env) {
  const Index w = a.window_end();
  if (w < 1) throw InvalidArgument("interior window is empty");
  const DecayEnvelope unit = env.unit();
  double best = 0.0;
  for (Index n = 1; n <= w; ++n) {
    for (Index m = 1; m <= w; ++m) {
      const double x = std::abs(a(m, n));
      if (x == 0.0) continue;
      const double v = unit.value(m, n);
      const double ratio =
          v > kSafeFloor ? x / v : std::exp(std::log(x) - unit.log_value(m, n));
      best = std::max(best, ratio);
    }
  }
  return best;
}

Index envelope_violations(const TruncatedMatrix& a, const DecayEnvelope& env,
                          double rel_slack) {
  const Index w = a.window_end();
  Index count = 0;
  for (Index n = 1; n <= w; ++n) {
    for (Index m = 1; m <= w; ++m) {
      const double x = std::abs(a(m, n));
      if (x == 0.0) continue;
      const double v = env.value(m, n);
      const bool bad = v > kSafeFloor
                           ? x > v * (1.0 + rel_slack)
                           : std::log(x) > env.log_value(m, n) + std::log1p(rel_slack);
      if (bad) ++count;
    }
  }
  return count;
}

DecayFit fit_decay(const TruncatedMatrix& a, double beta) {
  if (!beta_ok(beta)) throw InvalidArgument("fit beta must lie in (0, 1]");
  return fit_antidiagonals(a, [beta](double d) { return std::pow(d, beta); });
}

DecayFit fit_decay_poly(const TruncatedMatrix& a) {
  return fit_antidiagonals(a, [](double d) { return std::log1p(d); });
}

ImplicationChain check_implication_chain(const TruncatedMatrix& a, double gamma) {
  if (a.size() < 32) throw InvalidArgument("implication chain needs N >= 32");
  const auto star = DecayEnvelope::poly_star(gamma);
  const auto dstar = DecayEnvelope::poly_dstar(gamma);
  const auto tstar = DecayEnvelope::poly_tstar(gamma);
  const TruncatedMatrix half = a.leading_block(a.size() / 2, a.margin() / 2);

  ImplicationChain r;
  r.c_star = membership_constant(a, star);
  r.c_dstar = membership_constant(a, dstar);
  r.c_tstar = membership_constant(a, tstar);
  r.c_star_half = membership_constant(half, star);
  r.c_dstar_half = membership_constant(half, dstar);
  r.c_tstar_half = membership_constant(half, tstar);
  auto diverges = [](double full, double part) { return part > 0.0 && full >= 1.5 * part; };
  r.star_diverges = diverges(r.c_star, r.c_star_half);
  r.dstar_diverges = diverges(r.c_dstar, r.c_dstar_half);
  r.tstar_diverges = diverges(r.c_tstar, r.c_tstar_half);
  return r;
}

double schur_bound(const TruncatedMatrix& a, double p) {
  if (!(p >= 1.0)) throw InvalidArgument("Schur bound needs p >= 1 or p = inf");
  const Eigen::MatrixXd abs = abs_entries(a);
  double k1 = 0.0, k2 = 0.0;
  for (Index i = 0; i < abs.rows(); ++i) {
    KahanSum row, col;
    for (Index j = 0; j < abs.cols(); ++j) {
      row += abs(i, j);
      col += abs(j, i);
    }
    k1 = std::max(k1, row.value());
    k2 = std::max(k2, col.value());
  }
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  return std::pow(k1, 1.0 - inv_p) * std::pow(k2, inv_p);
}

double convolution_constant(double gamma, double beta, Index n) {
  if (n < 16) throw InvalidArgument("convolution constant needs N >= 16");
  if (!(gamma > 0.0) || !beta_ok(beta)) throw InvalidArgument("invalid class parameters");
  Eigen::MatrixXd g(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i)
      g(i, j) = std::exp(-gamma * std::pow(static_cast<double>(std::abs(i - j)), beta));
  const Eigen::MatrixXd g2 = g * g;
  double best = kNegInf;
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      if (g2(i, j) <= 0.0) continue;
      const double d = static_cast<double>(std::abs(i - j));
      best = std::max(best, std::log(g2(i, j)) + 0.5 * gamma * std::pow(d, beta));
    }
  }
  return std::exp(best);
}

ProductPrediction product_envelope(double c_a, double gamma_a, double c_b, double gamma_b,
                                   double beta, std::optional<double> target) {
  if (!(gamma_a > 0.0 && gamma_b > 0.0) || !beta_ok(beta))
    throw InvalidArgument("invalid class parameters");
  if (!(c_a >= 0.0 && c_b >= 0.0)) throw InvalidArgument("class constants must be nonnegative");
  const double lo = std::min(gamma_a, gamma_b);
  const double hi = std::max(gamma_a, gamma_b);
  double rate = lo;
  if (target) {
    if (!(*target > 0.0) || *target >= lo)
      throw InvalidArgument("target rate must lie in (0, min(gamma_A, gamma_B))");
    rate = *target;
  } else if (gamma_a == gamma_b) {
    throw InvalidArgument("equal rates need a target rate below gamma");
  }
  return {c_a * c_b * 2.0 * p_series(hi - rate, beta), rate, beta};
}

ProductCheck verify_product_envelope(const TruncatedMatrix& a, const TruncatedMatrix& b,
                                     const ProductPrediction& prediction) {
  if (a.size() != b.size()) throw InvalidArgument("dimension mismatch");
  const TruncatedMatrix ab(Matrix(a.entries() * b.entries()), a.margin());
  const auto env = DecayEnvelope::jaffard(prediction.gamma, prediction.beta, prediction.c);
  return {membership_constant(ab, env), prediction.c, envelope_violations(ab, env)};
}

double poly_continuity_bound(double gamma0, double gamma1, double eps, double c0, double c1) {
  require(gamma0 >= 0.0 && gamma1 > 0.0, "continuity bound needs gamma0 >= 0, gamma1 > 0");
  require(eps > 0.0 && eps < 1.0, "continuity bound needs eps in (0, 1)");
  require(c0 >= 0.0 && c1 >= 0.0, "continuity constants must be nonnegative");
  double k = 0.0;
  if (c1 > 0.0) k += c1 * power_series_sum(gamma0 + 1.0 + eps);
  if (c0 > 0.0) k += c0 * power_series_sum(1.0 + eps);
  return k;
}

double subexp_continuity_bound(double beta, double gamma0, double gamma1, double eps,
                               double c0, double c1) {
  require(beta_ok(beta), "continuity bound needs beta in (0, 1]");
  require(gamma0 >= 0.0 && gamma1 > 0.0, "continuity bound needs gamma0 >= 0, gamma1 > 0");
  require(eps > 0.0 && eps < 1.0, "continuity bound needs eps in (0, 1)");
  require(c0 >= 0.0 && c1 >= 0.0, "continuity constants must be nonnegative");
  double k = 0.0;
  if (c1 > 0.0) k += c1 * p_series_from_one(gamma0 + eps, beta, 1e-12);
  if (c0 > 0.0) k += c0 * p_series_from_one(eps, beta, 1e-12);
  return k;
}

ContinuityCheck check_continuity_bound(const TruncatedMatrix& a, const NormFamily& family,
                                       double level_in, double level_out, double k,
                                       std::span<const CoefficientSequence> samples,
                                       double rel_slack) {
  ContinuityCheck r;
  for (const auto& c : samples) {
    const double lhs = sup_graded_norm(apply_matrix(a, c), family, level_out);
    const double rhs = k * sup_graded_norm(c, family, level_in);
    ++r.trials;
    if (lhs == 0.0) continue;
    const double ratio = rhs > 0.0 ? lhs / rhs : kInf;
    r.max_ratio = std::max(r.max_ratio, ratio);
    if (ratio > 1.0 + rel_slack) ++r.violations;
  }
  return r;
}

FixedLevelContinuity verify_fixed_level_continuity(const TruncatedMatrix& a,
                                                   const DecayEnvelope& env, Index trials,
                                                   std::uint64_t seed) {
  NormFamily family;
  switch (env.kind) {
    case EnvelopeKind::eq_newdecay:
    case EnvelopeKind::grdecay:
      family = NormFamily::poly();
      break;
    case EnvelopeKind::subexp_split:
      family = NormFamily::subexp(env.beta);
      break;
    default:
      throw InvalidArgument("fixed-level continuity needs eq_newdecay, grdecay or subexp_split");
  }
  env.validate();
  if (envelope_violations(a, env) > 0) throw InvalidArgument("envelope violated");

  const Index n = a.size();
  const double level = env.gamma1;
  std::vector<double> lw(static_cast<std::size_t>(n));
  for (Index i = 1; i <= n; ++i) lw[i - 1] = family.log_weight(i, level);

  FixedLevelContinuity r;
  r.level = level;
  const Eigen::MatrixXd abs = abs_entries(a);
  std::vector<double> logs(static_cast<std::size_t>(n));
  for (Index m = 0; m < n; ++m) {
    for (Index j = 0; j < n; ++j)
      logs[j] = abs(m, j) > 0.0 ? std::log(abs(m, j)) + lw[m] - lw[j] : kNegInf;
    r.exact_norm = std::max(r.exact_norm, lp_norm_from_logs(logs, 1.0));
  }

  Rng rng = make_stream(seed, "fixed-level-continuity");
  std::uniform_int_distribution<Index> pick_row(0, n - 1);
  for (Index t = 0; t < trials; ++t) {
    Vector c(n);
    if (t % 2 == 0) {
      const Vector u = uniform_vector(rng, n, true);
      for (Index j = 0; j < n; ++j) c[j] = u[j] * std::exp(-lw[j]);
    } else {
      // Phases aligned with one row: attains that row's weighted sum.
      const Index m = pick_row(rng);
      for (Index j = 0; j < n; ++j) {
        const Complex z = a.entries()(m, j);
        const Complex phase = std::abs(z) > 0.0 ? std::conj(z) / std::abs(z) : Complex(1.0);
        c[j] = phase * std::exp(-lw[j]);
      }
    }
    const CoefficientSequence cs(std::move(c));
    const double den = sup_graded_norm(cs, family, level);
    if (den == 0.0) continue;
    r.max_trial_ratio =
        std::max(r.max_trial_ratio, sup_graded_norm(apply_matrix(a, cs), family, level) / den);
  }
  return r;
}

}  // namespace frameforge
