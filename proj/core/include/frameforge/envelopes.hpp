#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "frameforge/types.hpp"
#include "frameforge/weights.hpp"

namespace frameforge {

enum class EnvelopeKind {
  poly_star,      // C (1+min)^g / (1+max)^{2g}
  poly_dstar,     // C (1+|n-m|)^{-g}
  poly_tstar,     // C (min/max)^g
  colrow_poly,    // n>m: C0 n^{g0};            n<=m: C1 n^{g1} m^{-g1}
  colrow_subexp,  // n>m: C0 e^{g0 n^b};        n<=m: C1 e^{-g1 (m^b - n^b)}
  grdecay,        // C (1+|n-m|)^{-g1-1-eps}
  eq_newdecay,    // n>m: C0 n^{-1-eps};        n<=m: C1 n^{g1} m^{-g1-1-eps}
  subexp_split,   // n>m: C0 e^{-eps n^b};      n<=m: C1 e^{g1 n^b - (g1+eps) m^b}
  jaffard,        // C e^{-g |m-n|^b}
};

std::string_view to_string(EnvelopeKind kind);
EnvelopeKind envelope_kind_from_string(std::string_view name);

/// Off-diagonal bound family. Single-constant kinds use `c`; the split
/// (column/row) kinds use `c0` above the diagonal and `c1` on and below it.
struct DecayEnvelope {
  EnvelopeKind kind = EnvelopeKind::jaffard;
  double gamma = 1.0;
  double gamma0 = 0.0;
  double gamma1 = 1.0;
  double beta = 1.0;
  double eps = 0.5;
  double c = 1.0;
  double c0 = 1.0;
  double c1 = 1.0;

  static DecayEnvelope poly_star(double gamma, double c = 1.0);
  static DecayEnvelope poly_dstar(double gamma, double c = 1.0);
  static DecayEnvelope poly_tstar(double gamma, double c = 1.0);
  static DecayEnvelope colrow_poly(double gamma0, double gamma1, double c0 = 1.0,
                                   double c1 = 1.0);
  static DecayEnvelope colrow_subexp(double beta, double gamma0, double gamma1,
                                     double c0 = 1.0, double c1 = 1.0);
  static DecayEnvelope grdecay(double gamma1, double eps, double c = 1.0);
  static DecayEnvelope eq_newdecay(double gamma1, double eps, double c0 = 1.0,
                                   double c1 = 1.0);
  static DecayEnvelope subexp_split(double beta, double gamma1, double eps, double c0 = 1.0,
                                    double c1 = 1.0);
  static DecayEnvelope jaffard(double gamma, double beta = 1.0, double c = 1.0);

  /// Same shape with every constant set to 1.
  DecayEnvelope unit() const;

  double log_value(Index m, Index n) const;
  double value(Index m, Index n) const;

  /// Throws InvalidArgument when a parameter is out of range.
  void validate() const;
};

double envelope_value(const DecayEnvelope& env, Index m, Index n);

CoefficientSequence apply_matrix(const TruncatedMatrix& a, const CoefficientSequence& c);

/// max over the interior window of |A_mn| / env_unit(m, n).
double membership_constant(const TruncatedMatrix& a, const DecayEnvelope& env);

/// Number of interior entries with |A_mn| > env(m, n) (declared constants),
/// up to a relative slack.
Index envelope_violations(const TruncatedMatrix& a, const DecayEnvelope& env,
                          double rel_slack = 1e-12);

struct DecayFit {
  double gamma = 0.0;     // +inf when no off-diagonal mass is left
  double c = 0.0;
  double residual = 0.0;  // max |log data - log model|
  Index usable = 0;       // anti-diagonals entering the regression
  bool degenerate() const { return std::isinf(gamma); }
};

/// Regresses log max_{|m-n|=d} |A_mn| on d^beta over d = 1..N-2*margin-1,
/// inside the interior window.
DecayFit fit_decay(const TruncatedMatrix& a, double beta);
/// Same, against log(1 + d): fits C (1+d)^{-gamma}.
DecayFit fit_decay_poly(const TruncatedMatrix& a);

struct ImplicationChain {
  double c_star = 0.0;
  double c_dstar = 0.0;
  double c_tstar = 0.0;
  // Constants on the leading N/2 block, for the doubling comparison.
  double c_star_half = 0.0;
  double c_dstar_half = 0.0;
  double c_tstar_half = 0.0;
  bool star_diverges = false;
  bool dstar_diverges = false;
  bool tstar_diverges = false;
};

ImplicationChain check_implication_chain(const TruncatedMatrix& a, double gamma);

/// K1^{1/p'} K2^{1/p} with K1 the largest row sum and K2 the largest column
/// sum of |A|.
double schur_bound(const TruncatedMatrix& a, double p);

/// max_{m,n <= N} (sum_k e^{-g|m-k|^b} e^{-g|k-n|^b}) e^{(g/2)|m-n|^b}.
double convolution_constant(double gamma, double beta, Index n);

struct ProductPrediction {
  double c = 0.0;
  double gamma = 0.0;
  double beta = 1.0;
};

/// Envelope of AB for A in E_{gA,b} (constant cA) and B in E_{gB,b}. With
/// gA != gB the rate is min(gA, gB); with a target rate it must lie below
/// min(gA, gB) (required when gA == gB).
ProductPrediction product_envelope(double c_a, double gamma_a, double c_b, double gamma_b,
                                   double beta,
                                   std::optional<double> target = std::nullopt);

struct ProductCheck {
  double c_emp = 0.0;
  double c_pred = 0.0;
  Index violations = 0;
};

ProductCheck verify_product_envelope(const TruncatedMatrix& a, const TruncatedMatrix& b,
                                     const ProductPrediction& prediction);

/// C1 zeta(g0+1+eps) + C0 zeta(1+eps).
double poly_continuity_bound(double gamma0, double gamma1, double eps, double c0, double c1);
/// C1 P'_{g0+eps,b} + C0 P'_{eps,b}, P'_{a,b} = sum_{n>=1} e^{-a n^b}.
double subexp_continuity_bound(double beta, double gamma0, double gamma1, double eps,
                               double c0, double c1);

struct ContinuityCheck {
  Index trials = 0;
  Index violations = 0;
  double max_ratio = 0.0;  // max ||Ac||_out / (K ||c||_in)
};

/// Tests ||Ac||_{sup,level_out} <= K ||c||_{sup,level_in} on the given vectors.
ContinuityCheck check_continuity_bound(const TruncatedMatrix& a, const NormFamily& family,
                                       double level_in, double level_out, double k,
                                       std::span<const CoefficientSequence> samples,
                                       double rel_slack = 1e-12);

struct FixedLevelContinuity {
  double max_trial_ratio = 0.0;
  /// Exact operator norm of the truncation on the weighted sup space:
  /// max_m w_m sum_n |A_mn| / w_n.
  double exact_norm = 0.0;
  double level = 0.0;
};

/// For eq_newdecay / grdecay (poly family) or subexp_split (subexp family):
/// ratio ||Ac||_{sup,g1} / ||c||_{sup,g1}. Throws when A is not under env.
FixedLevelContinuity verify_fixed_level_continuity(const TruncatedMatrix& a,
                                                   const DecayEnvelope& env, Index trials,
                                                   std::uint64_t seed = 0);

}  // namespace frameforge
