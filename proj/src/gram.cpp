#include "asclt/gram.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace asclt {

namespace {

void require_finite(std::span<const double> x, const char* what) {
  for (double v : x)
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

double max_product_deviation(const SymMatrix& s, const SymMatrix& s_inv) {
  const std::size_t d = s.dim();
  double worst = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      double p = 0.0;
      for (std::size_t k = 0; k < d; ++k) p += s(i, k) * s_inv(k, j);
      const double target = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(p - target));
    }
  }
  return worst;
}

}  // namespace

GramState::GramState(const SymMatrix& s0, int refresh_interval)
    : s_(s0), s_inv_(s0.dim()), refresh_interval_(refresh_interval) {
  if (!is_symmetric_within(s0))
    throw std::invalid_argument("GramState: prior matrix is not symmetric");
  if (refresh_interval_ < 1) throw std::invalid_argument("GramState: refresh interval must be >= 1");
  Cholesky chol(s_);  // throws naming the failing minor when not SPD
  s_inv_ = chol.inverse();
  log_det_ = chol.log_det();
  prior_log_det_ = log_det_;
}

double GramState::rank_one_update(std::span<const double> phi) {
  if (phi.size() != dim()) throw std::invalid_argument("rank_one_update: dimension mismatch");
  require_finite(phi, "rank_one_update");

  std::vector<double> u(dim());
  s_inv_.multiply(phi, u);
  double c = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) c += phi[i] * u[i];

  if (c < 0.0) {
    // the maintained inverse has drifted off positive definiteness
    refresh();
    s_inv_.multiply(phi, u);
    c = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) c += phi[i] * u[i];
    if (c < 0.0) throw std::runtime_error("rank_one_update: negative curvature after refresh");
  }

  s_inv_.add_outer(u, -1.0 / (1.0 + c));
  s_.add_outer(phi);
  log_det_ += std::log1p(c);
  ++n_;
  if (++updates_since_refresh_ > refresh_interval_) refresh();
  return c / (1.0 + c);
}

void GramState::refresh() {
  try {
    Cholesky chol(s_);
    s_inv_ = chol.inverse();
    log_det_ = chol.log_det();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("GramState::refresh: design matrix corrupted: ") +
                             e.what());
  }
  if (max_product_deviation(s_, s_inv_) > 1e-8)
    throw std::runtime_error("GramState::refresh: inverse fails the product check");
  updates_since_refresh_ = 0;
}

double GramState::quadratic_form(std::span<const double> x) const {
  if (x.size() != dim()) throw std::invalid_argument("quadratic_form: dimension mismatch");
  require_finite(x, "quadratic_form");
  return std::max(0.0, s_inv_.quad(x));
}

double GramState::design_quadratic_form(std::span<const double> x) const {
  if (x.size() != dim()) throw std::invalid_argument("design_quadratic_form: dimension mismatch");
  return s_.quad(x);
}

void GramState::apply_inverse(std::span<const double> x, std::span<double> y) const {
  s_inv_.multiply(x, y);
}

}  // namespace asclt
