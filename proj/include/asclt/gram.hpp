// Regularized design matrix S_n = S + sum phi_k phi_k^T with rank-one
// maintenance of its inverse and log-determinant.
//
// Each update applies the Sherman-Morrison correction to the stored inverse
// and advances log det(S_n) by log(1 + phi^T S_{n-1}^{-1} phi). The returned
// coefficient f_n = phi^T S_n^{-1} phi = (d_n - d_{n-1}) / d_n measures the
// relative information added at step n and always lies in [0, 1).

#ifndef ASCLT_GRAM_HPP
#define ASCLT_GRAM_HPP

#include <cstdint>
#include <span>

#include "asclt/sym_matrix.hpp"

namespace asclt {

class GramState {
 public:
  static constexpr int kDefaultRefreshInterval = 4096;

  /// Installs the prior S0 (symmetric positive definite, validated by direct
  /// factorization). The step counter starts at -1: no data consumed yet.
  explicit GramState(const SymMatrix& s0, int refresh_interval = kDefaultRefreshInterval);

  std::size_t dim() const { return s_.dim(); }
  std::int64_t step() const { return n_; }
  double log_det() const { return log_det_; }
  double prior_log_det() const { return prior_log_det_; }
  const SymMatrix& design() const { return s_; }
  const SymMatrix& inverse() const { return s_inv_; }

  /// S <- S + phi phi^T. Returns f = c / (1 + c) with c = phi^T S_inv phi
  /// taken against the pre-update inverse. A zero phi is accepted (c = 0,
  /// state unchanged except the step counter).
  double rank_one_update(std::span<const double> phi);

  /// Recomputes inverse and log-determinant from S by direct symmetric
  /// factorization. Loss of positive definiteness or an inverse that fails
  /// the product check is a fatal state-corruption error.
  void refresh();

  /// x^T S_inv x, evaluated over the symmetric triangle; clamped at zero.
  double quadratic_form(std::span<const double> x) const;

  /// x^T S x (the design matrix itself, not its inverse).
  double design_quadratic_form(std::span<const double> x) const;

  /// S_inv x into y.
  void apply_inverse(std::span<const double> x, std::span<double> y) const;

  int updates_since_refresh() const { return updates_since_refresh_; }

 private:
  SymMatrix s_;
  SymMatrix s_inv_;
  double log_det_ = 0.0;
  double prior_log_det_ = 0.0;
  std::int64_t n_ = -1;
  int updates_since_refresh_ = 0;
  int refresh_interval_ = kDefaultRefreshInterval;
};

}  // namespace asclt

#endif
