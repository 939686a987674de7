#pragma once

#include <optional>

#include "frameforge/envelopes.hpp"
#include "frameforge/types.hpp"

namespace frameforge {

/// Free parameters of the inverse-decay estimate. Unset rates default to
/// gamma' = gamma / 2 and gamma'' = gamma' / 2.
struct JaffardParameters {
  double beta = 1.0;
  double gamma = 1.0;  // declared class rate of A
  std::optional<double> gamma_prime;
  std::optional<double> gamma_dprime;
  double eps_free = 0.5;
};

struct JaffardReport {
  double beta = 1.0;
  double gamma = 1.0;
  double gamma_prime = 0.0;
  double gamma_dprime = 0.0;
  double eps_free = 0.5;

  double c_a = 0.0;            // membership constant of A at rate gamma
  double norm_aas = 0.0;       // ||AA*||
  double r_contraction = 0.0;  // ||Id - AA*/||AA*|| ||
  double c_aas = 0.0;          // membership constant of AA* at rate gamma'
  double c1 = 0.0;             // 1 + C_AA* / ||AA*||
  double p = 0.0;              // P_{gamma' - gamma'', beta}
  double k = 0.0;              // 2 C1 P
  double log_ratio = 1.0;      // ln(1/r) / ln(K/r), 1 in the limit r -> 0
  double neumann = 0.0;        // 1 + r/(1-r) / (2P) + 1/(1-r)
  double gamma1_pred = 0.0;
  double c_inv_pred = 0.0;
};

/// Predicted envelope C_inv e^{-gamma1 |m-n|^beta} of A^{-1}. Throws
/// SingularMatrix("singular at truncation") when A is not invertible on the
/// truncation (sigma_min <= 1e-10 or r >= 1).
JaffardReport jaffard_predict(const TruncatedMatrix& a, const JaffardParameters& params);

struct InverseDecayCheck {
  Index violations = 0;
  double max_ratio = 0.0;  // max |A^{-1}_mn| / predicted envelope on the window
  DecayFit fit;            // decay fit of A^{-1} at the report's beta
};

InverseDecayCheck verify_inverse_decay(const TruncatedMatrix& a, const JaffardReport& report);

}  // namespace frameforge
