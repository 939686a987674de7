#include "frameforge/jaffard.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/LU>

#include "frameforge/frames.hpp"
#include "frameforge/linalg.hpp"
#include "frameforge/series.hpp"

namespace frameforge {

JaffardReport jaffard_predict(const TruncatedMatrix& a, const JaffardParameters& params) {
  JaffardReport rep;
  rep.beta = params.beta;
  rep.gamma = params.gamma;
  rep.gamma_prime = params.gamma_prime.value_or(params.gamma / 2.0);
  rep.gamma_dprime = params.gamma_dprime.value_or(rep.gamma_prime / 2.0);
  rep.eps_free = params.eps_free;

  if (!(params.beta > 0.0 && params.beta <= 1.0))
    throw InvalidArgument("beta must lie in (0, 1]");
  if (!(params.gamma > 0.0)) throw InvalidArgument("class rate gamma must be positive");
  if (!(rep.gamma_prime > 0.0 && rep.gamma_prime < rep.gamma))
    throw InvalidArgument("gamma' must lie in (0, gamma)");
  if (!(rep.gamma_dprime > 0.0 && rep.gamma_dprime < rep.gamma_prime))
    throw InvalidArgument("gamma'' must lie in (0, gamma')");
  if (!(rep.eps_free > 0.0 && rep.eps_free < 1.0))
    throw InvalidArgument("eps must lie in (0, 1)");

  const Matrix& m = a.entries();
  const Eigen::VectorXd sigma = singular_values(m);
  if (sigma[sigma.size() - 1] <= kRankTolerance) throw SingularMatrix("singular at truncation");

  const Matrix aas = m * m.adjoint();
  rep.norm_aas = spectral_norm_hermitian(aas);
  const Matrix resid = Matrix::Identity(m.rows(), m.cols()) - aas / rep.norm_aas;
  rep.r_contraction = spectral_norm_hermitian(resid);
  if (!(rep.r_contraction < 1.0)) throw SingularMatrix("singular at truncation");

  rep.c_a = membership_constant(a, DecayEnvelope::jaffard(rep.gamma, rep.beta));
  rep.c_aas = membership_constant(TruncatedMatrix(aas, a.margin()),
                                  DecayEnvelope::jaffard(rep.gamma_prime, rep.beta));
  rep.c1 = 1.0 + rep.c_aas / rep.norm_aas;
  rep.p = p_series(rep.gamma_prime - rep.gamma_dprime, rep.beta);
  rep.k = 2.0 * rep.c1 * rep.p;

  const double r = rep.r_contraction;
  if (r > 0.0) {
    if (!(rep.k > r)) throw InvalidArgument("degenerate log ratio: K <= r");
    rep.log_ratio = std::log(1.0 / r) / std::log(rep.k / r);
  } else {
    rep.log_ratio = 1.0;
  }
  rep.gamma1_pred = std::min(rep.log_ratio * rep.gamma_dprime * (1.0 - rep.eps_free),
                             rep.eps_free * rep.gamma_dprime);
  rep.neumann = 1.0 + r / (1.0 - r) / (2.0 * rep.p) + 1.0 / (1.0 - r);

  // (AA*)^{-1} = ||AA*||^{-1} sum_n R^n, then A^{-1} = A* (AA*)^{-1} by the
  // product lemma at rate gamma1 < gamma.
  rep.c_inv_pred = rep.c_a * (rep.neumann / rep.norm_aas) * 2.0 *
                   p_series(rep.gamma - rep.gamma1_pred, rep.beta);
  return rep;
}

InverseDecayCheck verify_inverse_decay(const TruncatedMatrix& a, const JaffardReport& report) {
  Eigen::PartialPivLU<Matrix> lu(a.entries());
  if (!(lu.rcond() > 1e-14)) throw SingularMatrix("singular at truncation");
  const TruncatedMatrix inv(Matrix(lu.inverse()), a.margin());

  const auto env = DecayEnvelope::jaffard(report.gamma1_pred, report.beta, report.c_inv_pred);
  InverseDecayCheck out;
  out.violations = envelope_violations(inv, env);
  out.max_ratio = membership_constant(inv, env) / report.c_inv_pred;
  out.fit = localization_fit(inv, report.beta);
  return out;
}

}  // namespace frameforge
