#include "frameforge/graded.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "frameforge/random.hpp"
#include "frameforge/series.hpp"
#include "frameforge/summation.hpp"

namespace frameforge {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kInf = std::numeric_limits<double>::infinity();

double weight_value(const NormFamily& family, Index n, double k) {
  if (k == 0.0) return 1.0;
  const double x = static_cast<double>(n);
  return family.kind == NormFamily::Kind::poly ? std::pow(x, k)
                                                : std::exp(k * std::pow(x, family.beta));
}

bool level_stable(const CoefficientSequence& c, const NormFamily& family, double k) {
  const Index half = c.size() / 2;
  const double head = sup_graded_norm(c, family, k, 1, half);
  const double tail = sup_graded_norm(c, family, k, half + 1, c.size());
  return tail == 0.0 || tail < 0.95 * head;
}

std::vector<double> candidate_levels(const NormFamily& family) {
  std::vector<double> ks;
  if (family.kind == NormFamily::Kind::poly) {
    for (int k = 0; k <= kMaxPolyOrder; ++k) ks.push_back(k);
  } else {
    for (int j = 0; j <= 200; ++j) ks.push_back(0.1 * j);
  }
  return ks;
}

}  // namespace

double graded_l2_norm(const CoefficientSequence& c, const NormFamily& family, double k) {
  if (!(k >= 0.0)) throw InvalidArgument("graded norm level must be nonnegative");
  std::vector<double> logs(static_cast<std::size_t>(c.size()));
  double lmax = kNegInf;
  for (Index n = 1; n <= c.size(); ++n) {
    const double a = std::abs(c(n));
    logs[n - 1] = a > 0.0 ? std::log(a) + family.log_weight(n, k) : kNegInf;
    lmax = std::max(lmax, logs[n - 1]);
  }
  if (lmax == kNegInf) return 0.0;
  if (2.0 * lmax < 600.0) {
    KahanSum acc;
    for (Index n = 1; n <= c.size(); ++n) {
      const double t = std::abs(c(n)) * weight_value(family, n, k);
      acc += t * t;
    }
    return std::sqrt(acc.value());
  }
  return lp_norm_from_logs(logs, 2.0);
}

bool GradedNormProfile::stable() const {
  return std::none_of(diverging.begin(), diverging.end(), [](bool d) { return d; });
}

std::vector<double> default_levels() {
  std::vector<double> l;
  for (int k = 0; k <= 10; ++k) l.push_back(k);
  return l;
}

GradedNormProfile graded_profile(const CoefficientSequence& c, const NormFamily& family,
                                 const std::vector<double>& levels) {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!(levels[i] >= 0.0)) throw InvalidArgument("levels must be nonnegative");
    if (i > 0 && levels[i] < levels[i - 1]) throw InvalidArgument("levels must be sorted");
  }
  GradedNormProfile p;
  p.family = family;
  p.levels = levels;
  const CoefficientSequence half = c.head(c.size() / 2);
  for (double k : levels) {
    p.norms.push_back(graded_l2_norm(c, family, k));
    p.half_norms.push_back(graded_l2_norm(half, family, k));
  }
  // The weights are nested, so the exact norms are nondecreasing in k; this
  // only removes last-bit rounding differences between levels.
  for (std::size_t i = 1; i < levels.size(); ++i) {
    p.norms[i] = std::max(p.norms[i], p.norms[i - 1]);
    p.half_norms[i] = std::max(p.half_norms[i], p.half_norms[i - 1]);
  }
  for (std::size_t i = 0; i < levels.size(); ++i)
    p.diverging.push_back(p.norms[i] > 1.05 * p.half_norms[i]);
  return p;
}

FFrameInterval fframe_bounds_estimate(const FrameSystem& e,
                                      const std::vector<CoefficientSequence>& samples,
                                      const NormFamily& family, double k) {
  if (samples.empty()) throw InvalidArgument("no samples");
  FFrameInterval out;
  out.level = k;
  out.lower = kInf;
  for (const auto& f : samples) {
    const double base = graded_l2_norm(f, family, k);
    if (!(base > 0.0)) throw InvalidArgument("zero-norm sample");
    const double ratio = graded_l2_norm(analysis(e, f), family, k) / base;
    out.lower = std::min(out.lower, ratio);
    out.upper = std::max(out.upper, ratio);
  }
  return out;
}

std::vector<CoefficientSequence> default_fframe_samples(const HermiteContext& ctx, Index n,
                                                        Index random_count,
                                                        std::uint64_t seed) {
  std::vector<CoefficientSequence> out;
  Rng rng = make_stream(seed, "fframe-samples");
  for (Index s = 0; s < random_count; ++s) {
    Vector v = uniform_vector(rng, n, true);
    for (Index i = 0; i < n; ++i) v[i] *= std::exp(-static_cast<double>(i + 1));
    out.emplace_back(std::move(v));
  }
  for (Index k = 1; k <= std::min<Index>(8, n); ++k) out.push_back(CoefficientSequence::delta(n, k));
  out.push_back(project(ctx, Gaussian{1.0}, n));
  out.push_back(project(ctx, Gaussian{3.0}, n));
  return out;
}

std::vector<Index> default_checkpoints(Index n) {
  std::vector<Index> cps;
  for (Index m = 1; m < n; m *= 2) cps.push_back(m);
  cps.push_back(n);
  return cps;
}

std::vector<ErrorPoint> expansion_error_curve(const CoefficientSequence& f, const FrameSystem& e,
                                              const NormFamily& family,
                                              const std::vector<double>& levels,
                                              const std::vector<Index>& checkpoints,
                                              ExpansionSide side) {
  const Index n = e.size();
  if (f.size() != n) throw InvalidArgument("dimension mismatch");
  std::vector<Index> cps = checkpoints;
  std::sort(cps.begin(), cps.end());
  for (Index m : cps)
    if (m < 1 || m > n) throw InvalidArgument("checkpoint outside 1..N");

  const Matrix& primal = e.entries();
  const Matrix& dual = e.dual_entries();
  const bool dual_coef = side == ExpansionSide::dual_coefficients;
  // On a square truncation <f, d_n> is the unique solution of E^T c = f; an LU
  // solve keeps the residual componentwise small, which the dense dual does
  // not once high levels amplify the tail.
  const Vector coef = dual_coef ? Vector(primal.transpose().partialPivLu().solve(f.values()))
                                : Vector(primal.conjugate() * f.values());
  const Matrix& vectors = dual_coef ? primal : dual;

  std::vector<ErrorPoint> out;
  Vector partial = Vector::Zero(n);
  Index done = 0;
  for (Index m : cps) {
    for (; done < m; ++done) partial += coef[done] * vectors.row(done).transpose();
    const CoefficientSequence residual(Vector(f.values() - partial));
    for (double k : levels) out.push_back({m, k, graded_l2_norm(residual, family, k)});
  }
  return out;
}

Pairing pair_distribution(const DistributionCoefficients& b, const CoefficientSequence& f,
                          const NormFamily& family) {
  if (!(b.q >= 0.0)) throw InvalidArgument("growth order must be nonnegative");
  if (!(b.c > 0.0)) throw InvalidArgument("growth constant must be positive");
  for (Index n = 1; n <= b.b.size(); ++n) {
    const double bound = std::log(b.c) + family.log_weight(n, b.q);
    const double a = std::abs(b.b(n));
    if (a > 0.0 && std::log(a) > bound + 1e-12)
      throw InvalidArgument("declared growth bound violated");
  }

  const Index len = std::min(f.size(), b.b.size());
  Pairing out;
  for (Index n = 1; n <= len; ++n) out.value += f(n) * b.b(n);

  // |f_n| <= M_k w_k(n)^{-1} at a stable level k, so the neglected terms are
  // at most c M_k sum_{n>N} w_q(n) / w_k(n).
  const auto horizon = static_cast<double>(f.size());
  double best = kInf;
  double best_level = 0.0;
  for (double k : candidate_levels(family)) {
    const double s = k - b.q;
    if (family.kind == NormFamily::Kind::poly ? !(s > 1.0) : !(s > 0.0)) continue;
    if (!level_stable(f, family, k)) continue;
    const double mk = sup_graded_norm(f, family, k);
    if (!std::isfinite(mk)) continue;
    const double series = family.kind == NormFamily::Kind::poly
                              ? std::pow(horizon, 1.0 - s) / (s - 1.0)
                              : p_series_tail_bound(s, family.beta, horizon);
    const double bound = b.c * mk * series;
    if (bound < best) {
      best = bound;
      best_level = k;
    }
  }
  if (!std::isfinite(best)) throw InvalidArgument("non-summable pairing declared");
  out.tail_bound = best;
  out.decay_level = best_level;
  return out;
}

PgReport property_pg_check(const FrameSystem& e, const NormFamily& family, Index trials,
                           std::uint64_t seed) {
  const Index n = e.size();
  const bool poly = family.kind == NormFamily::Kind::poly;
  const std::vector<double> grid = {poly ? 1.0 : family.beta};
  Rng rng = make_stream(seed, "property-pg");
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> order(2.0, 6.0);
  std::uniform_real_distribution<double> rate(0.5, 1.5);

  PgReport rep;
  for (Index t = 0; t < trials; ++t) {
    const double s = poly ? order(rng) : rate(rng);
    Vector v(n);
    for (Index i = 1; i <= n; ++i) {
      const double x = static_cast<double>(i);
      const double mag = poly ? std::pow(x, -s) : std::exp(-s * std::pow(x, family.beta));
      v[i - 1] = std::polar(mag, phase(rng));
    }
    const CoefficientSequence f(std::move(v));
    const auto cf = classify_coefficient_decay(f, grid);
    const auto ca = classify_coefficient_decay(analysis(e, f), grid);

    PgTrial tr;
    tr.order_f = cf.poly_order;
    tr.order_analysis = ca.poly_order;
    tr.gamma_f = cf.subexp.front().gamma;
    tr.gamma_analysis = ca.subexp.front().gamma;
    if (poly) {
      tr.agree = std::abs(tr.order_f - tr.order_analysis) <= 1;
    } else if (std::isinf(tr.gamma_f) || std::isinf(tr.gamma_analysis)) {
      tr.agree = std::isinf(tr.gamma_f) && std::isinf(tr.gamma_analysis);
    } else {
      tr.agree = std::abs(tr.gamma_analysis - tr.gamma_f) <= 0.1 * tr.gamma_f;
    }
    rep.details.push_back(tr);
    ++rep.trials;
    if (tr.agree) ++rep.agreements;
  }
  return rep;
}

}  // namespace frameforge
