#pragma once

#include <span>
#include <utility>
#include <vector>

#include "frameforge/types.hpp"

namespace frameforge {

enum class WeightKind { moderate, subexponential, exponential };

/// Positive weight on the real line:
///   moderate:        (1 + |x|)^k
///   subexponential:  exp(gamma |x|^beta), beta in (0, 1]
///   exponential:     exp(gamma |x|)
/// together with its declared admissibility constant C.
class Weight {
 public:
  static Weight moderate(double k, double c = 1.0);
  static Weight subexponential(double beta, double gamma, double c = 1.0);
  static Weight exponential(double gamma, double c = 1.0);

  WeightKind kind() const { return kind_; }
  double order() const { return k_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  double admissibility_constant() const { return c_; }

  double operator()(double x) const;
  double log_value(double x) const;

  /// Shift envelope of the admissibility inequality mu(t+x) <= C env(t) mu(x).
  double log_shift_envelope(double t) const;

 private:
  Weight(WeightKind kind, double k, double beta, double gamma, double c);

  WeightKind kind_;
  double k_ = 0.0;
  double beta_ = 1.0;
  double gamma_ = 0.0;
  double c_ = 1.0;
};

double eval_weight(const Weight& w, double x);

using GridPoint = std::pair<double, double>;  // (t, x)

/// Integer lattice {-radius..radius}^2.
std::vector<GridPoint> lattice_grid(int radius = 50);

/// Smallest C with mu(t+x) <= C env(t) mu(x) over the grid. `declared`
/// supplies the envelope; by default the weight is checked against its own
/// class.
double verify_weight_admissibility(const Weight& w, std::span<const GridPoint> grid);
double verify_weight_admissibility(const Weight& w, const Weight& declared,
                                   std::span<const GridPoint> grid);

struct AdmissibilityGrowth {
  double c_emp = 0.0;       // lattice of the given radius
  double c_emp_wide = 0.0;  // lattice of twice the radius
  bool diverging = false;   // c_emp_wide >= 1.5 c_emp
};

AdmissibilityGrowth admissibility_growth(const Weight& w, const Weight& declared,
                                         int radius = 50);

/// l^p_mu norm (sum |c_n|^p mu(n)^p)^{1/p} over n = 1..N; p = inf gives
/// sup |c_n| mu(n).
double weighted_norm(const CoefficientSequence& c, const Weight& w, double p);

/// Grading family for sup- and l2-graded norms: weights n^k or exp(k n^beta).
struct NormFamily {
  enum class Kind { poly, subexp };
  Kind kind = Kind::poly;
  double beta = 1.0;

  static NormFamily poly() { return {Kind::poly, 1.0}; }
  static NormFamily subexp(double beta);

  /// log of the level-k weight at index n >= 1.
  double log_weight(Index n, double k) const;
};

/// sup_n |c_n| n^k (poly) or sup_n |c_n| exp(k n^beta) (subexp).
double sup_graded_norm(const CoefficientSequence& c, const NormFamily& family, double k);

/// Same supremum restricted to logical indices first..last.
double sup_graded_norm(const CoefficientSequence& c, const NormFamily& family, double k,
                       Index first, Index last);

}  // namespace frameforge
