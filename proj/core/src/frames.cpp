#include "frameforge/frames.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <string_view>

#include <Eigen/SVD>

#include "frameforge/linalg.hpp"
#include "frameforge/random.hpp"

namespace frameforge {

struct FrameSystem::Cache {
  std::once_flag svd_once;
  Eigen::VectorXd sigma;
  std::once_flag dual_once;
  Matrix dual;
};

FrameSystem::FrameSystem(TruncatedMatrix coeffs, std::string label)
    : coeffs_(std::move(coeffs)), label_(std::move(label)), cache_(std::make_shared<Cache>()) {}

FrameSystem FrameSystem::orthonormal(Index n, std::string label) {
  return FrameSystem(TruncatedMatrix::identity(n), std::move(label));
}

const Eigen::VectorXd& FrameSystem::singular_values() const {
  std::call_once(cache_->svd_once, [this] {
    cache_->sigma = Eigen::BDCSVD<Matrix>(coeffs_.entries()).singularValues();
  });
  return cache_->sigma;
}

const Matrix& FrameSystem::dual_entries() const {
  const Eigen::VectorXd& sigma = singular_values();
  if (sigma.size() == 0 || sigma[sigma.size() - 1] <= kRankTolerance)
    throw SingularMatrix("rank-deficient frame operator");
  // E (E^* E)^{-1} = E^{-*} on a square truncation. An LU inverse keeps small
  // entries accurate to working precision relative to themselves, where the
  // SVD form U S^{-1} V^* has an absolute error floor near 1e-16.
  std::call_once(cache_->dual_once, [this] {
    cache_->dual = coeffs_.entries().partialPivLu().inverse().adjoint();
  });
  return cache_->dual;
}

namespace {

void require_same_size(Index a, Index b) {
  if (a != b) throw InvalidArgument("dimension mismatch");
}

std::vector<double> log_weights(const Weight& w, Index n) {
  std::vector<double> lw(static_cast<std::size_t>(n));
  for (Index i = 1; i <= n; ++i) lw[i - 1] = w.log_value(static_cast<double>(i));
  return lw;
}

Matrix conjugate_by_weight(const Matrix& m, const std::vector<double>& lw) {
  Matrix out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      out(i, j) = m(i, j) == Complex(0.0) ? Complex(0.0) : m(i, j) * std::exp(lw[i] - lw[j]);
  return out;
}

}  // namespace

TruncatedMatrix cross_gram(const FrameSystem& e, const FrameSystem& f) {
  require_same_size(e.size(), f.size());
  return TruncatedMatrix(Matrix(e.entries() * f.entries().adjoint()), e.coeffs().margin());
}

CoefficientSequence analysis(const FrameSystem& e, const CoefficientSequence& f) {
  require_same_size(e.size(), f.size());
  return CoefficientSequence(Vector(e.entries().conjugate() * f.values()));
}

CoefficientSequence synthesis(const FrameSystem& e, const CoefficientSequence& c) {
  require_same_size(e.size(), c.size());
  return CoefficientSequence(Vector(e.entries().transpose() * c.values()));
}

FrameBounds frame_bounds(const FrameSystem& e) {
  const Eigen::VectorXd& s = e.singular_values();
  return {s[s.size() - 1] * s[s.size() - 1], s[0] * s[0]};
}

TruncatedMatrix frame_operator(const FrameSystem& e) {
  return TruncatedMatrix(Matrix(e.entries().transpose() * e.entries().conjugate()),
                         e.coeffs().margin());
}

FrameSystem canonical_dual(const FrameSystem& e) {
  return FrameSystem(TruncatedMatrix(e.dual_entries(), e.coeffs().margin()),
                     e.label() + "-dual");
}

double biorthogonality_error(const FrameSystem& e) {
  const Matrix g = e.dual_entries() * e.entries().adjoint();
  return (g - Matrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

DecayFit localization_fit(const TruncatedMatrix& a, std::optional<double> beta) {
  try {
    return beta ? fit_decay(a, *beta) : fit_decay_poly(a);
  } catch (const InvalidArgument& err) {
    if (std::string_view(err.what()) != "fewer than 3 usable anti-diagonals") throw;
    DecayFit fit;
    fit.gamma = std::numeric_limits<double>::infinity();
    fit.c = a.entries().cwiseAbs().maxCoeff();
    return fit;
  }
}

DualLocalization dual_localization_check(const FrameSystem& e, std::optional<double> beta) {
  const FrameSystem onb = FrameSystem::orthonormal(e.size());
  DualLocalization r;
  r.poly = !beta.has_value();
  r.primal = localization_fit(cross_gram(e, onb), beta);
  r.dual = localization_fit(cross_gram(canonical_dual(e), onb), beta);
  return r;
}

PerturbationSpec PerturbationSpec::constant(int r, Complex value, std::vector<double> eps) {
  if (r < 1) throw InvalidArgument("perturbation order r must be positive");
  PerturbationSpec s;
  s.r = r;
  s.eps = eps.empty() ? std::vector<double>(static_cast<std::size_t>(r), 1.0 / (r + 1.0))
                      : std::move(eps);
  s.a.assign(static_cast<std::size_t>(r), {});
  s.constant_value = value;
  return s;
}

Complex PerturbationSpec::coefficient(int i, Index n) const {
  if (constant_value) return *constant_value;
  const auto& seq = a[static_cast<std::size_t>(i - 1)];
  return n <= static_cast<Index>(seq.size()) ? seq[static_cast<std::size_t>(n - 1)] : Complex(0.0);
}

double PerturbationSpec::eps_sum() const {
  return std::accumulate(eps.begin(), eps.end(), 0.0);
}

void PerturbationSpec::validate() const {
  if (r < 1) throw InvalidArgument("perturbation order r must be positive");
  if (eps.size() != static_cast<std::size_t>(r))
    throw InvalidArgument("eps must list one bound per shift");
  if (!constant_value && a.size() != static_cast<std::size_t>(r))
    throw InvalidArgument("a must list one sequence per shift");
  for (double e : eps)
    if (!(e >= 0.0) || !std::isfinite(e)) throw InvalidArgument("eps entries must be nonnegative");

  for (int i = 1; i <= r; ++i) {
    const double bound = eps[static_cast<std::size_t>(i - 1)];
    const Index len = constant_value ? 2 : static_cast<Index>(a[static_cast<std::size_t>(i - 1)].size());
    for (Index n = 2; n <= len; ++n) {
      const Complex z = coefficient(i, n);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw InvalidArgument("perturbation entries must be finite");
      if (std::abs(z) > bound) throw InvalidArgument("entry exceeds eps");
    }
  }
  double first = 0.0;
  for (int i = 1; i <= r; ++i) first += std::abs(coefficient(i, 1));
  if (first > 1.0) throw InvalidArgument("first-row sum > 1");
  if (eps_sum() >= 1.0) throw InvalidArgument("eps sum >= 1");
}

PerturbedBasis build_perturbed_basis(const PerturbationSpec& spec, Index n) {
  spec.validate();
  if (n < 1) throw InvalidArgument("truncation size must be positive");
  Matrix e = Matrix::Identity(n, n);
  Index dropped = 0;
  for (int i = 1; i <= spec.r; ++i) {
    for (Index row = 1; row <= n; ++row) {
      const Complex z = spec.coefficient(i, row);
      if (z == Complex(0.0)) continue;
      if (row + i > n) {
        ++dropped;
        continue;
      }
      e(row - 1, row + i - 1) += z;
    }
  }
  return {FrameSystem(TruncatedMatrix(std::move(e)), "perturbed-r" + std::to_string(spec.r)),
          dropped};
}

ExampleReport verify_example_inequalities(const PerturbationSpec& spec, Index n, Index trials,
                                          std::uint64_t seed) {
  const PerturbedBasis basis = build_perturbed_basis(spec, n);
  const Matrix u = basis.system.entries().transpose();
  ExampleReport r;
  r.contraction_constant = (3.0 + spec.eps_sum()) / 4.0;
  r.min_lower_ratio = std::numeric_limits<double>::infinity();
  r.dropped = basis.dropped;
  constexpr double kSlack = 1e-12;

  Rng rng = make_stream(seed, "example-inequalities");
  for (Index t = 0; t < trials; ++t) {
    const Vector f = random_unit_vector(rng, n, true);
    const Vector uf = u * f;
    const double nf = f.norm();
    const double nuf = uf.norm();
    const double contraction = (uf - f).norm() / (r.contraction_constant * (nuf + nf));
    const double growth = nuf / nf;
    r.max_contraction_ratio = std::max(r.max_contraction_ratio, contraction);
    r.max_growth_ratio = std::max(r.max_growth_ratio, growth);
    if (contraction > 1.0 + kSlack) ++r.contraction_violations;
    if (growth > 3.0 * (1.0 + kSlack)) ++r.growth_violations;
    if (std::abs(f[0]) > 0.0) {
      const double lower = nuf / std::abs(f[0]);
      r.min_lower_ratio = std::min(r.min_lower_ratio, lower);
      if (lower < 1.0 - kSlack) ++r.lower_violations;
    }
    ++r.trials;
  }
  return r;
}

PermutationStability permutation_stability(const FrameSystem& e, const CoefficientSequence& f,
                                           Index permutations, std::uint64_t seed) {
  const Index n = e.size();
  require_same_size(n, f.size());
  const Vector coef = analysis(e, f).values();
  const Matrix& rows = e.entries();
  auto sum_in_order = [&](const std::vector<Index>& order, double* max_partial) {
    Vector partial = Vector::Zero(n);
    for (Index k : order) {
      partial += coef[k] * rows.row(k).transpose();
      if (max_partial) *max_partial = std::max(*max_partial, partial.norm());
    }
    return partial;
  };

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  PermutationStability r;
  const Vector reference = sum_in_order(order, &r.max_partial_norm);
  Rng rng = make_stream(seed, "permutation-stability");
  for (Index p = 0; p < permutations; ++p) {
    std::shuffle(order.begin(), order.end(), rng);
    const Vector total = sum_in_order(order, &r.max_partial_norm);
    r.max_total_deviation = std::max(r.max_total_deviation, (total - reference).norm());
    ++r.permutations;
  }
  return r;
}

double weighted_l2_operator_norm(const Matrix& m, const Weight& w) {
  return spectral_norm(conjugate_by_weight(m, log_weights(w, m.rows())));
}

double norm_equivalence_constant(const FrameSystem& e, const Weight& w) {
  const Matrix dual_synthesis = e.dual_entries().transpose();
  return std::max(weighted_l2_operator_norm(e.entries().conjugate(), w),
                  weighted_l2_operator_norm(dual_synthesis, w));
}

WeightedOperatorNorms weighted_operator_norms(const FrameSystem& e, const Weight& w, double p,
                                              double beta, Index trials, std::uint64_t seed) {
  if (!(p >= 1.0)) throw InvalidArgument("weighted norms need p >= 1 or p = inf");
  if (w.kind() != WeightKind::moderate && !(w.beta() < beta))
    throw InvalidArgument("incompatible weight");
  const DecayFit fit = localization_fit(e.coeffs(), beta);
  if (!(fit.gamma > 0.0)) throw InvalidArgument("system is not localized");

  const Index n = e.size();
  const Matrix ua = e.entries().conjugate();
  const Matrix ts = e.entries().transpose();
  const Matrix s = ts * ua;
  const std::vector<double> lw = log_weights(w, n);

  WeightedOperatorNorms r;
  r.frame_operator_min = std::numeric_limits<double>::infinity();
  Rng rng = make_stream(seed, "weighted-operator-norms");
  for (Index t = 0; t < trials; ++t) {
    Vector f = uniform_vector(rng, n, true);
    // Alternate flat vectors with ones already damped by the weight.
    if (t % 2 == 1)
      for (Index i = 0; i < n; ++i) f[i] *= std::exp(-lw[i]);
    const CoefficientSequence fs(f);
    const double base = weighted_norm(fs, w, p);
    if (base == 0.0) continue;
    auto ratio = [&](const Matrix& m) {
      return weighted_norm(CoefficientSequence(Vector(m * f)), w, p) / base;
    };
    r.analysis = std::max(r.analysis, ratio(ua));
    r.synthesis = std::max(r.synthesis, ratio(ts));
    const double sr = ratio(s);
    r.frame_operator = std::max(r.frame_operator, sr);
    r.frame_operator_min = std::min(r.frame_operator_min, sr);
    ++r.trials;
  }
  if (p == 2.0) {
    r.analysis_exact = spectral_norm(conjugate_by_weight(ua, lw));
    r.synthesis_exact = spectral_norm(conjugate_by_weight(ts, lw));
    const Eigen::VectorXd sv = singular_values(conjugate_by_weight(s, lw));
    r.frame_operator_exact = sv[0];
    r.frame_operator_min_exact = sv[sv.size() - 1];
  }
  return r;
}

}  // namespace frameforge
