#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "frameforge/frames.hpp"
#include "frameforge/hermite.hpp"
#include "frameforge/types.hpp"
#include "frameforge/weights.hpp"

namespace frameforge {

/// ||(c_n w_k(n))_n||_{l^2} with w_k(n) = n^k (poly) or e^{k n^beta} (subexp).
double graded_l2_norm(const CoefficientSequence& c, const NormFamily& family, double k);

struct GradedNormProfile {
  NormFamily family;
  std::vector<double> levels;
  std::vector<double> norms;
  std::vector<double> half_norms;  // same norms over the first N/2 entries
  std::vector<bool> diverging;     // norm grows by more than 5% from N/2 to N

  bool stable() const;
};

std::vector<double> default_levels();  // 0, 1, ..., 10

GradedNormProfile graded_profile(const CoefficientSequence& c, const NormFamily& family,
                                 const std::vector<double>& levels = default_levels());

struct FFrameInterval {
  double lower = 0.0;
  double upper = 0.0;
  double level = 0.0;
};

/// min / max over samples of ||analysis(E, f)||_{H^k} / ||f||_{H^k}.
FFrameInterval fframe_bounds_estimate(const FrameSystem& e,
                                      const std::vector<CoefficientSequence>& samples,
                                      const NormFamily& family, double k);

/// `random_count` vectors u_n e^{-n} (u uniform complex), then h_1..h_8,
/// gaussian(1) and gaussian(3), all of length n.
std::vector<CoefficientSequence> default_fframe_samples(const HermiteContext& ctx, Index n,
                                                        Index random_count,
                                                        std::uint64_t seed);

enum class ExpansionSide {
  dual_coefficients,    // sum_{n<=M} <f, d_n> e_n
  primal_coefficients,  // sum_{n<=M} <f, e_n> d_n
};

struct ErrorPoint {
  Index m = 0;
  double level = 0.0;
  double error = 0.0;
};

/// Powers of two below n, then n.
std::vector<Index> default_checkpoints(Index n);

/// ||f - partial sum up to M||_{H^k} for every checkpoint M and level k.
std::vector<ErrorPoint> expansion_error_curve(
    const CoefficientSequence& f, const FrameSystem& e, const NormFamily& family,
    const std::vector<double>& levels, const std::vector<Index>& checkpoints,
    ExpansionSide side = ExpansionSide::dual_coefficients);

/// Coefficients b_n = F(h_n) of a functional with declared growth
/// |b_n| <= c n^q (poly) or c e^{q n^beta} (subexp).
struct DistributionCoefficients {
  CoefficientSequence b;
  double q = 0.0;
  double c = 1.0;
};

struct Pairing {
  Complex value;
  double tail_bound = 0.0;  // bound on the neglected sum over n > N
  double decay_level = 0.0; // sup level of f used for the bound
};

/// F(f) = sum_n <f, h_n> b_n over the common length, with a tail bound from
/// the declared growth and the largest stable sup level of f.
Pairing pair_distribution(const DistributionCoefficients& b, const CoefficientSequence& f,
                          const NormFamily& family);

struct PgTrial {
  int order_f = -1;
  int order_analysis = -1;
  double gamma_f = 0.0;
  double gamma_analysis = 0.0;
  bool agree = false;
};

struct PgReport {
  Index trials = 0;
  Index agreements = 0;
  std::vector<PgTrial> details;
};

/// Random f with prescribed decay (n^{-s} for poly, e^{-g n^beta} for subexp)
/// classified before and after analysis by E.
PgReport property_pg_check(const FrameSystem& e, const NormFamily& family, Index trials,
                           std::uint64_t seed);

}  // namespace frameforge
