// Dense symmetric matrix with Cholesky-based factorization helpers.
// Sized for the small design matrices of recursive least squares (d <= 64).

#ifndef ASCLT_SYM_MATRIX_HPP
#define ASCLT_SYM_MATRIX_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace asclt {

/// Symmetric d x d matrix of doubles, row-major storage.
///
/// Construction from raw entries enforces symmetry up to a relative
/// tolerance of 1e-12 and then mirrors the lower triangle so the stored
/// entries are exactly symmetric.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim);
  SymMatrix(std::size_t dim, const std::vector<double>& row_major);

  static SymMatrix identity(std::size_t dim);
  static SymMatrix diagonal(const std::vector<double>& diag);

  std::size_t dim() const { return dim_; }

  double operator()(std::size_t i, std::size_t j) const {
    return a_[i * dim_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }

  /// Adds w * x x^T, mirroring entries so symmetry stays exact.
  void add_outer(std::span<const double> x, double w = 1.0);

  /// y = A x
  void multiply(std::span<const double> x, std::span<double> y) const;

  /// x^T A x evaluated over the symmetric triangle (diagonal + 2*offdiag).
  double quad(std::span<const double> x) const;

  double trace() const;
  double max_abs_diff(const SymMatrix& other) const;

  const std::vector<double>& data() const { return a_; }

 private:
  std::size_t dim_ = 0;
  std::vector<double> a_;
};

/// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
///
/// Throws std::invalid_argument naming the first failing leading principal
/// minor when the input is not positive definite.
class Cholesky {
 public:
  explicit Cholesky(const SymMatrix& m);

  std::size_t dim() const { return dim_; }

  /// log det(A) = 2 * sum log L_ii
  double log_det() const;

  /// Solves A x = b in place.
  void solve(std::span<double> b) const;

  /// Dense inverse of A, reassembled symmetric.
  SymMatrix inverse() const;

 private:
  std::size_t dim_;
  std::vector<double> l_;  // row-major lower triangle
};

/// Relative symmetry check used by validators: |a_ij - a_ji| against
/// 1e-12 * (1 + |a_ij|).
bool is_symmetric_within(const SymMatrix& m, double tol = 1e-12);

std::string format_vector(std::span<const double> x);

}  // namespace asclt

#endif
