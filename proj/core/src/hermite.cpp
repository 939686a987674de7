#include "frameforge/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "frameforge/weights.hpp"

namespace frameforge {

namespace {

constexpr double kRescale = 1e150;

// Scaled recurrence: h_k(x) = t_k exp(scale - x^2/2). Calls visit(k, value)
// for classical k = 0..count-1 and returns (t_{count-1}, t_{count-2}, scale).
template <class Visit>
void run_recurrence(Index count, double x, Visit&& visit, double* last = nullptr,
                    double* before_last = nullptr) {
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25);
  double scale = 0.0;
  const double gauss = -0.5 * x * x;
  for (Index k = 0; k < count; ++k) {
    if (k > 0) {
      const double kk = static_cast<double>(k);
      const double next = x * std::sqrt(2.0 / kk) * cur - std::sqrt((kk - 1.0) / kk) * prev;
      prev = cur;
      cur = next;
      if (std::abs(cur) > kRescale) {
        cur /= kRescale;
        prev /= kRescale;
        scale += std::log(kRescale);
      }
    }
    visit(k, cur == 0.0 ? 0.0 : std::copysign(std::exp(std::log(std::abs(cur)) + scale + gauss), cur));
  }
  if (last) *last = cur;
  if (before_last) *before_last = prev;
}

// Gauss-Hermite nodes: Golub-Welsch eigenvalues, polished by Newton on h_Q.
Eigen::VectorXd gauss_hermite_nodes(Index q) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(q);
  Eigen::VectorXd off(q - 1);
  for (Index k = 1; k < q; ++k) off[k - 1] = std::sqrt(static_cast<double>(k) / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  Eigen::VectorXd x = es.eigenvalues();

  const double s2q = std::sqrt(2.0 * static_cast<double>(q));
  for (Index i = 0; i < q; ++i) {
    for (int it = 0; it < 3; ++it) {
      double hq = 0.0, hq1 = 0.0;
      // Same scale on both, so their ratio is exact.
      run_recurrence(q + 1, x[i], [](Index, double) {}, &hq, &hq1);
      const double deriv = s2q * hq1 - x[i] * hq;
      if (deriv == 0.0) break;
      x[i] -= hq / deriv;
    }
  }
  std::sort(x.begin(), x.end());
  // Enforce exact symmetry of the rule.
  for (Index i = 0; i < q / 2; ++i) {
    const double s = 0.5 * (x[q - 1 - i] - x[i]);
    x[i] = -s;
    x[q - 1 - i] = s;
  }
  if (q % 2 == 1) x[q / 2] = 0.0;
  return x;
}

double interpolate(const Sampled& s, double x) {
  if (x < s.grid.front() || x > s.grid.back()) return 0.0;
  auto it = std::upper_bound(s.grid.begin(), s.grid.end(), x);
  if (it == s.grid.end()) return s.values.back();
  const auto j = static_cast<std::size_t>(it - s.grid.begin());
  const double t = (x - s.grid[j - 1]) / (s.grid[j] - s.grid[j - 1]);
  return (1.0 - t) * s.values[j - 1] + t * s.values[j];
}

SubexpFit fit_subexp(const CoefficientSequence& c, double beta) {
  SubexpFit fit;
  fit.beta = beta;
  std::vector<double> xs, ys;
  for (Index n = 1; n <= c.size(); ++n) {
    const double a = std::abs(c(n));
    if (a < 1e-300) continue;
    xs.push_back(std::pow(static_cast<double>(n), beta));
    ys.push_back(std::log(a));
  }
  if (xs.size() < 3) {
    fit.gamma = std::numeric_limits<double>::infinity();
    return fit;
  }
  const auto k = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  fit.gamma = std::max(0.0, -slope);
  fit.c = std::exp(intercept);
  for (std::size_t i = 0; i < xs.size(); ++i)
    fit.residual = std::max(fit.residual, std::abs(ys[i] - intercept - slope * xs[i]));
  return fit;
}

}  // namespace

Eigen::VectorXd hermite_values(Index count, double x) {
  Eigen::VectorXd out(count);
  run_recurrence(count, x, [&](Index k, double v) { out[k] = v; });
  return out;
}

HermiteContext::HermiteContext(Index nmax) : nmax_(nmax) {
  if (nmax < 1) throw InvalidArgument("nmax must be positive");
  const Index q = 2 * nmax + 8;
  nodes_ = gauss_hermite_nodes(q);
  weights_.resize(q);
  basis_.resize(q, nmax);
  for (Index i = 0; i < q; ++i) {
    double sum = 0.0;
    run_recurrence(q, nodes_[i], [&](Index k, double v) {
      sum += v * v;
      if (k < nmax) basis_(i, k) = v;
    });
    weights_[i] = 1.0 / sum;
  }
}

Eigen::VectorXd HermiteContext::classical_weights() const {
  return weights_.cwiseProduct((-nodes_.array().square()).exp().matrix());
}

double hermite_eval(const HermiteContext& ctx, Index n, double x) {
  if (n < 1 || n > ctx.nmax()) throw InvalidArgument("Hermite index out of range");
  double value = 0.0;
  run_recurrence(n, x, [&](Index k, double v) {
    if (k == n - 1) value = v;
  });
  return value;
}

void validate(const TestFunction& f) {
  if (const auto* g = std::get_if<Gaussian>(&f)) {
    if (!(g->a > 0.0) || !std::isfinite(g->a)) throw InvalidArgument("gaussian needs a > 0");
  } else if (const auto* h = std::get_if<HermiteCombo>(&f)) {
    for (const Complex& z : h->coeffs)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw InvalidArgument("hermite_combo coefficients must be finite");
  } else {
    const auto& s = std::get<Sampled>(f);
    if (s.grid.size() < 2 || s.grid.size() != s.values.size())
      throw InvalidArgument("sampled grid incompatible with rule");
    for (std::size_t i = 1; i < s.grid.size(); ++i)
      if (!(s.grid[i] > s.grid[i - 1])) throw InvalidArgument("sampled grid incompatible with rule");
    for (double v : s.values)
      if (!std::isfinite(v)) throw InvalidArgument("sampled values must be finite");
  }
}

std::optional<double> l2_norm_squared(const TestFunction& f) {
  if (const auto* g = std::get_if<Gaussian>(&f)) return std::sqrt(std::numbers::pi / g->a);
  if (const auto* h = std::get_if<HermiteCombo>(&f)) {
    double s = 0.0;
    for (const Complex& z : h->coeffs) s += std::norm(z);
    return s;
  }
  return std::nullopt;
}

CoefficientSequence project(const HermiteContext& ctx, const TestFunction& f, Index n) {
  if (n < 1 || n > ctx.nmax()) throw InvalidArgument("N out of range for the Hermite context");
  validate(f);
  if (const auto* h = std::get_if<HermiteCombo>(&f)) {
    Vector v = Vector::Zero(n);
    const Index k = std::min<Index>(n, static_cast<Index>(h->coeffs.size()));
    for (Index i = 0; i < k; ++i) v[i] = h->coeffs[static_cast<std::size_t>(i)];
    return CoefficientSequence(std::move(v));
  }

  const Eigen::VectorXd& x = ctx.nodes();
  Eigen::VectorXd weighted(x.size());
  if (const auto* g = std::get_if<Gaussian>(&f)) {
    for (Index i = 0; i < x.size(); ++i)
      weighted[i] = ctx.function_weights()[i] * std::exp(-0.5 * g->a * x[i] * x[i]);
  } else {
    const auto& s = std::get<Sampled>(f);
    const double reach = std::sqrt(2.0 * static_cast<double>(n) + 1.0);
    if (s.grid.front() > -reach || s.grid.back() < reach)
      throw InvalidArgument("sampled grid incompatible with rule");
    for (Index i = 0; i < x.size(); ++i)
      weighted[i] = ctx.function_weights()[i] * interpolate(s, x[i]);
  }
  const Eigen::VectorXd c = ctx.basis_at_nodes().leftCols(n).transpose() * weighted;
  return CoefficientSequence(Vector(c.cast<Complex>()));
}

bool poly_level_stable(const CoefficientSequence& c, double k) {
  const Index half = c.size() / 2;
  const auto family = NormFamily::poly();
  const double head = sup_graded_norm(c, family, k, 1, half);
  const double tail = sup_graded_norm(c, family, k, half + 1, c.size());
  return tail == 0.0 || tail < 0.95 * head;
}

DecayClassification classify_coefficient_decay(const CoefficientSequence& c,
                                               const std::vector<double>& beta_grid) {
  if (c.size() < 32) throw InvalidArgument("decay classification needs N >= 32");
  DecayClassification r;
  for (int k = 0; k <= kMaxPolyOrder && poly_level_stable(c, k); ++k) r.poly_order = k;
  for (double beta : beta_grid) {
    if (!(beta > 0.0 && beta <= 1.0)) throw InvalidArgument("beta grid entries must lie in (0, 1]");
    r.subexp.push_back(fit_subexp(c, beta));
  }
  return r;
}

}  // namespace frameforge
