#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frameforge/envelopes.hpp"
#include "frameforge/types.hpp"
#include "frameforge/weights.hpp"

namespace frameforge {

/// Truncated system (e_m) given by E_mn = <e_m, h_n>: row m holds the Hermite
/// coefficients of e_m. Singular values and the canonical dual are computed on first use
/// and shared between copies.
class FrameSystem {
 public:
  explicit FrameSystem(TruncatedMatrix coeffs, std::string label = "system");

  static FrameSystem orthonormal(Index n, std::string label = "onb");

  const TruncatedMatrix& coeffs() const { return coeffs_; }
  const Matrix& entries() const { return coeffs_.entries(); }
  Index size() const { return coeffs_.size(); }
  const std::string& label() const { return label_; }

  /// Descending singular values of E.
  const Eigen::VectorXd& singular_values() const;
  /// Coefficient rows of the canonical dual. Throws SingularMatrix when
  /// sigma_min(E) <= 1e-10.
  const Matrix& dual_entries() const;

 private:
  struct Cache;
  TruncatedMatrix coeffs_;
  std::string label_;
  std::shared_ptr<Cache> cache_;
};

inline constexpr double kRankTolerance = 1e-10;

/// <e_m, f_n> = (E F^*)_mn.
TruncatedMatrix cross_gram(const FrameSystem& e, const FrameSystem& f);
/// (<f, e_m>)_m = conj(E) f.
CoefficientSequence analysis(const FrameSystem& e, const CoefficientSequence& f);
/// Coefficients of sum_n c_n e_n = E^T c.
CoefficientSequence synthesis(const FrameSystem& e, const CoefficientSequence& c);

struct FrameBounds {
  double lower = 0.0;  // sigma_min^2
  double upper = 0.0;  // sigma_max^2
};

FrameBounds frame_bounds(const FrameSystem& e);
/// S f = sum_n <f, e_n> e_n, i.e. E^T conj(E).
TruncatedMatrix frame_operator(const FrameSystem& e);
FrameSystem canonical_dual(const FrameSystem& e);

/// max |<d_m, e_n> - delta_mn|.
double biorthogonality_error(const FrameSystem& e);

struct DualLocalization {
  DecayFit primal;
  DecayFit dual;
  bool poly = false;
};

/// Fits the decay of the cross-Grams of E and of its dual against the
/// reference basis; exponential-type in d^beta, or polynomial when `beta` is
/// empty. A banded cross-Gram (too few nonzero anti-diagonals) counts as
/// localized at every rate.
DualLocalization dual_localization_check(const FrameSystem& e, std::optional<double> beta);

/// fit_decay / fit_decay_poly, mapping "fewer than 3 usable anti-diagonals"
/// to the +inf sentinel.
DecayFit localization_fit(const TruncatedMatrix& a, std::optional<double> beta);

/// e_n = h_n + sum_{i=1}^r a_n^i h_{n+i}.
struct PerturbationSpec {
  int r = 1;
  std::vector<double> eps;               // eps_i, i = 1..r
  std::vector<std::vector<Complex>> a;   // a[i-1][n-1] = a_n^i; missing entries are 0
  std::optional<Complex> constant_value; // when set, every a_n^i equals it

  /// Every a_n^i equal to `value`; eps defaults to 1/(r+1) each.
  static PerturbationSpec constant(int r, Complex value, std::vector<double> eps = {});

  Complex coefficient(int i, Index n) const;
  double eps_sum() const;
  /// Throws InvalidArgument naming the first violated condition.
  void validate() const;
};

struct PerturbedBasis {
  FrameSystem system;
  Index dropped = 0;  // nonzero shift terms with n + i > N
};

PerturbedBasis build_perturbed_basis(const PerturbationSpec& spec, Index n);

struct ExampleReport {
  double contraction_constant = 0.0;  // (3 + sum eps) / 4
  double max_contraction_ratio = 0.0; // ||Uf - f|| / (c (||Uf|| + ||f||))
  double max_growth_ratio = 0.0;      // ||Uf|| / ||f||
  double min_lower_ratio = 0.0;       // ||Uf|| / |<f, h_1>|
  Index trials = 0;
  Index contraction_violations = 0;
  Index growth_violations = 0;
  Index lower_violations = 0;
  Index dropped = 0;
  Index violations() const { return contraction_violations + growth_violations + lower_violations; }
};

/// U h_n = e_n, so U = E^T in coordinates. Random unit f drawn from `seed`.
ExampleReport verify_example_inequalities(const PerturbationSpec& spec, Index n, Index trials,
                                          std::uint64_t seed);

struct PermutationStability {
  Index permutations = 0;
  double max_total_deviation = 0.0;  // max ||total_pi - total_identity||
  double max_partial_norm = 0.0;     // largest intermediate partial sum
};

/// Partial sums of sum_n <f, e_n> e_n in random orders.
PermutationStability permutation_stability(const FrameSystem& e, const CoefficientSequence& f,
                                           Index permutations, std::uint64_t seed);

struct WeightedOperatorNorms {
  double analysis = 0.0;         // max ||U_E f||_{p,mu} / ||f||_{p,mu}
  double synthesis = 0.0;        // max ||T_E c||_{p,mu} / ||c||_{p,mu}
  double frame_operator = 0.0;   // max ||S f|| / ||f||
  double frame_operator_min = 0.0;
  Index trials = 0;
  // p = 2 only: sigma_max / sigma_min of W M W^{-1}, W = diag(mu(n)).
  std::optional<double> analysis_exact;
  std::optional<double> synthesis_exact;
  std::optional<double> frame_operator_exact;
  std::optional<double> frame_operator_min_exact;
};

/// Requires a localized cross-Gram (fit in d^beta) and, for (sub)exponential
/// weights, beta_mu < beta ("incompatible weight" otherwise).
WeightedOperatorNorms weighted_operator_norms(const FrameSystem& e, const Weight& w, double p,
                                              double beta, Index trials, std::uint64_t seed);

/// Operator norm of M on l^2_mu: sigma_max(W M W^{-1}).
double weighted_l2_operator_norm(const Matrix& m, const Weight& w);

/// c with ||(<f, e_n>)||_{2,mu} / ||f||_{2,mu} in [1/c, c]:
/// max(||U_E||, ||T_dual||) on l^2_mu.
double norm_equivalence_constant(const FrameSystem& e, const Weight& w);

}  // namespace frameforge
