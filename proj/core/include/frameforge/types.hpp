#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace frameforge {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Caller supplied something outside an operation's preconditions.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix that must be inverted is (numerically) singular on the truncation.
class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read, parsed, or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite coefficient vector (c_1, ..., c_N). Logical index n maps to
/// values()[n - 1].
class CoefficientSequence {
 public:
  CoefficientSequence() = default;
  explicit CoefficientSequence(Vector values);

  static CoefficientSequence zeros(Index n);
  /// Canonical vector with a single 1 at logical index k.
  static CoefficientSequence delta(Index n, Index k);

  /// Builds c_n = fn(n) for n = 1..size.
  template <class Fn>
  static CoefficientSequence generate(Index size, Fn&& fn) {
    Vector v(size);
    for (Index n = 1; n <= size; ++n) v[n - 1] = Complex(fn(n));
    return CoefficientSequence(std::move(v));
  }

  Index size() const { return values_.size(); }
  Complex operator()(Index n) const { return values_[n - 1]; }
  const Vector& values() const { return values_; }

  /// First `n` entries.
  CoefficientSequence head(Index n) const;
  /// Zero-padded or truncated copy of length `n`.
  CoefficientSequence resized(Index n) const;

  friend CoefficientSequence operator+(const CoefficientSequence& a,
                                       const CoefficientSequence& b);
  friend CoefficientSequence operator-(const CoefficientSequence& a,
                                       const CoefficientSequence& b);
  friend CoefficientSequence operator*(Complex s, const CoefficientSequence& a);

 private:
  Vector values_;
};

/// Dense N x N matrix with 1-based logical indexing (m, n) and an interior
/// window {1, ..., N - margin} used by all decay checks. Truncation only
/// damages the high-index edge, so the window is one-sided.
class TruncatedMatrix {
 public:
  TruncatedMatrix() = default;
  /// Margin defaults to N / 8.
  explicit TruncatedMatrix(Matrix entries);
  TruncatedMatrix(Matrix entries, Index margin);

  static TruncatedMatrix identity(Index n);
  static TruncatedMatrix zero(Index n);

  /// Builds A_{mn} = fn(m, n) for m, n = 1..size.
  template <class Fn>
  static TruncatedMatrix generate(Index size, Fn&& fn) {
    Matrix a(size, size);
    for (Index n = 1; n <= size; ++n)
      for (Index m = 1; m <= size; ++m) a(m - 1, n - 1) = Complex(fn(m, n));
    return TruncatedMatrix(std::move(a));
  }

  Index size() const { return entries_.rows(); }
  Index margin() const { return margin_; }
  /// Last logical index inside the interior window.
  Index window_end() const { return size() - margin_; }

  Complex operator()(Index m, Index n) const { return entries_(m - 1, n - 1); }
  const Matrix& entries() const { return entries_; }

  bool is_real() const;
  TruncatedMatrix with_margin(Index margin) const;
  /// Leading size x size block with the given margin.
  TruncatedMatrix leading_block(Index size, Index margin) const;

 private:
  Matrix entries_;
  Index margin_ = 0;
};

Index default_margin(Index n);

}  // namespace frameforge
