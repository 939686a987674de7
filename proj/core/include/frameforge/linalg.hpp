#pragma once

#include "frameforge/types.hpp"

namespace frameforge {

/// Options for the power iteration used on large matrices.
struct PowerIteration {
  double tol = 1e-10;
  Index dense_below = 256;  // full SVD / eigensolver below this size
  Index max_iter = 0;       // 0 means 10 N
};

/// Largest singular value.
double spectral_norm(const Matrix& a, const PowerIteration& opt = {});

/// Largest |eigenvalue| of a Hermitian matrix (its spectral norm).
double spectral_norm_hermitian(const Matrix& h, const PowerIteration& opt = {});

/// All singular values, descending.
Eigen::VectorXd singular_values(const Matrix& a);

}  // namespace frameforge
