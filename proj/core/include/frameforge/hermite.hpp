#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "frameforge/types.hpp"

namespace frameforge {

/// Hermite functions h_1, ..., h_nmax (h_n is the classical h_{n-1}) together
/// with a Gauss-Hermite rule of order 2 nmax + 8. Immutable once built.
class HermiteContext {
 public:
  explicit HermiteContext(Index nmax = 512);

  Index nmax() const { return nmax_; }
  Index order() const { return nodes_.size(); }

  const Eigen::VectorXd& nodes() const { return nodes_; }
  /// Weights for integrands that already carry their Gaussian factor:
  /// int g(x) dx ~ sum_i W_i g(x_i). The classical weights are W_i e^{-x_i^2}.
  const Eigen::VectorXd& function_weights() const { return weights_; }
  Eigen::VectorXd classical_weights() const;

  /// order() x nmax() table of h_n(x_i).
  const Eigen::MatrixXd& basis_at_nodes() const { return basis_; }

 private:
  Index nmax_;
  Eigen::VectorXd nodes_;
  Eigen::VectorXd weights_;
  Eigen::MatrixXd basis_;
};

/// h_1(x), ..., h_count(x) by the normalized three-term recurrence, with the
/// Gaussian factor carried as a separate log scale.
Eigen::VectorXd hermite_values(Index count, double x);

/// n-th orthonormal Hermite function (1-based), n <= ctx.nmax().
double hermite_eval(const HermiteContext& ctx, Index n, double x);

struct Gaussian {
  double a = 1.0;  // e^{-a x^2 / 2}
};

struct HermiteCombo {
  std::vector<Complex> coeffs;  // f = sum_n coeffs[n-1] h_n
};

struct Sampled {
  std::vector<double> grid;  // strictly increasing
  std::vector<double> values;
};

using TestFunction = std::variant<Gaussian, HermiteCombo, Sampled>;

/// Throws InvalidArgument for malformed descriptors.
void validate(const TestFunction& f);

/// ||f||^2 in L^2(R) when known in closed form.
std::optional<double> l2_norm_squared(const TestFunction& f);

/// (<f, h_n>)_{n=1..N}.
CoefficientSequence project(const HermiteContext& ctx, const TestFunction& f, Index n);

struct SubexpFit {
  double beta = 1.0;
  double gamma = 0.0;  // +inf when fewer than three nonzero entries
  double c = 0.0;
  double residual = 0.0;
};

struct DecayClassification {
  /// Largest k <= 20 at which the level-k sup norm is stable between N/2 and
  /// N; -1 when even k = 0 is not.
  int poly_order = -1;
  std::vector<SubexpFit> subexp;
};

inline constexpr int kMaxPolyOrder = 20;

/// Level k counts as stable when the tail (N/2, N] keeps the weighted sup
/// below 0.95 of the head [1, N/2].
bool poly_level_stable(const CoefficientSequence& c, double k);

DecayClassification classify_coefficient_decay(
    const CoefficientSequence& c, const std::vector<double>& beta_grid = {0.25, 0.5, 0.75, 1.0});

}  // namespace frameforge
