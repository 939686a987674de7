#include "frameforge/linalg.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace frameforge {

namespace {

// Fixed pseudo-random start so results do not depend on global RNG state.
Vector start_vector(Index n) {
  Vector v(n);
  std::uint64_t s = 0x2545f4914f6cdd1dULL;
  for (Index i = 0; i < n; ++i) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    v[i] = 0.5 + static_cast<double>(s >> 11) * 0x1.0p-53;
  }
  return v.normalized();
}

template <class Apply>
double power_iterate(Index n, const PowerIteration& opt, Apply&& apply) {
  const Index cap = opt.max_iter > 0 ? opt.max_iter : 10 * n;
  Vector v = start_vector(n);
  double estimate = 0.0;
  for (Index it = 0; it < cap; ++it) {
    Vector w = apply(v);
    const double nrm = w.norm();
    if (nrm == 0.0) return 0.0;
    const bool done = std::abs(nrm - estimate) <= opt.tol * nrm;
    estimate = nrm;
    v = w / nrm;
    if (done) break;
  }
  return estimate;
}

}  // namespace

double spectral_norm(const Matrix& a, const PowerIteration& opt) {
  if (a.size() == 0) return 0.0;
  if (a.rows() < opt.dense_below) return singular_values(a)[0];
  // Iterate A* A; its dominant eigenvalue is sigma_max^2.
  const double lambda = power_iterate(a.cols(), opt, [&](const Vector& v) {
    return Vector(a.adjoint() * (a * v));
  });
  return std::sqrt(lambda);
}

double spectral_norm_hermitian(const Matrix& h, const PowerIteration& opt) {
  if (h.size() == 0) return 0.0;
  if (h.rows() != h.cols()) throw InvalidArgument("Hermitian norm needs a square matrix");
  if (h.rows() < opt.dense_below) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  return power_iterate(h.rows(), opt, [&](const Vector& v) { return Vector(h * v); });
}

Eigen::VectorXd singular_values(const Matrix& a) {
  Eigen::BDCSVD<Matrix> svd(a);
  return svd.singularValues();
}

}  // namespace frameforge
