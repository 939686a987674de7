#include "frameforge/types.hpp"

#include <string>

namespace frameforge {

namespace {

bool all_finite(const auto& x) {
  for (Index i = 0; i < x.size(); ++i) {
    const Complex z = x.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

}  // namespace

CoefficientSequence::CoefficientSequence(Vector values) : values_(std::move(values)) {
  if (!all_finite(values_))
    throw InvalidArgument("coefficient sequence has non-finite entries");
}

CoefficientSequence CoefficientSequence::zeros(Index n) {
  return CoefficientSequence(Vector::Zero(n));
}

CoefficientSequence CoefficientSequence::delta(Index n, Index k) {
  if (k < 1 || k > n) throw InvalidArgument("delta index out of range");
  Vector v = Vector::Zero(n);
  v[k - 1] = 1.0;
  return CoefficientSequence(std::move(v));
}

CoefficientSequence CoefficientSequence::head(Index n) const {
  if (n > size()) throw InvalidArgument("head longer than sequence");
  return CoefficientSequence(Vector(values_.head(n)));
}

CoefficientSequence CoefficientSequence::resized(Index n) const {
  Vector v = Vector::Zero(n);
  const Index k = std::min(n, size());
  v.head(k) = values_.head(k);
  return CoefficientSequence(std::move(v));
}

CoefficientSequence operator+(const CoefficientSequence& a, const CoefficientSequence& b) {
  if (a.size() != b.size()) throw InvalidArgument("dimension mismatch");
  return CoefficientSequence(Vector(a.values_ + b.values_));
}

CoefficientSequence operator-(const CoefficientSequence& a, const CoefficientSequence& b) {
  if (a.size() != b.size()) throw InvalidArgument("dimension mismatch");
  return CoefficientSequence(Vector(a.values_ - b.values_));
}

CoefficientSequence operator*(Complex s, const CoefficientSequence& a) {
  return CoefficientSequence(Vector(s * a.values_));
}

Index default_margin(Index n) { return n / 8; }

TruncatedMatrix::TruncatedMatrix(Matrix entries) : TruncatedMatrix() {
  const Index margin = default_margin(entries.rows());
  *this = TruncatedMatrix(std::move(entries), margin);
}

TruncatedMatrix::TruncatedMatrix(Matrix entries, Index margin)
    : entries_(std::move(entries)), margin_(margin) {
  if (entries_.rows() != entries_.cols())
    throw InvalidArgument("truncated matrix must be square");
  if (entries_.rows() < 1) throw InvalidArgument("truncated matrix must be nonempty");
  if (margin_ < 0 || 2 * margin_ >= entries_.rows())
    throw InvalidArgument("margin must satisfy 0 <= margin < N/2");
  if (!all_finite(entries_)) throw InvalidArgument("matrix has non-finite entries");
}

TruncatedMatrix TruncatedMatrix::identity(Index n) {
  return TruncatedMatrix(Matrix::Identity(n, n));
}

TruncatedMatrix TruncatedMatrix::zero(Index n) {
  return TruncatedMatrix(Matrix::Zero(n, n));
}

bool TruncatedMatrix::is_real() const {
  return (entries_.imag().array() == 0.0).all();
}

TruncatedMatrix TruncatedMatrix::with_margin(Index margin) const {
  return TruncatedMatrix(entries_, margin);
}

TruncatedMatrix TruncatedMatrix::leading_block(Index size, Index margin) const {
  if (size > this->size()) throw InvalidArgument("block larger than matrix");
  return TruncatedMatrix(Matrix(entries_.topLeftCorner(size, size)), margin);
}

}  // namespace frameforge
