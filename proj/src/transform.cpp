#include "asclt/transform.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace asclt {

namespace {

double relative_residual(double lhs, double rhs) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) / scale;
}

}  // namespace

std::vector<IdentityResidual> check_step_identities(const StepRecord& rec) {
  std::vector<IdentityResidual> out;
  const double riccati = (1.0 - rec.f) * rec.g * rec.g;
  // both sides zero means an exactly quiet step
  if (rec.a1 == 0.0 && riccati == 0.0) {
    out.push_back({"a1 = (1-f) g^2", 0.0});
  } else {
    out.push_back({"a1 = (1-f) g^2", relative_residual(rec.a1, riccati)});
  }
  if (rec.pi) {
    const double from_pi = (1.0 - rec.f) * (*rec.pi) * (*rec.pi);
    if (rec.a1 == 0.0 && from_pi == 0.0)
      out.push_back({"a1 = (1-f) pi^2", 0.0});
    else
      out.push_back({"a1 = (1-f) pi^2", relative_residual(rec.a1, from_pi)});
  }
  return out;
}

TransformState::TransformState(std::vector<double> m0, GramState gram)
    : m_(std::move(m0)), gram_(std::move(gram)) {
  if (m_.size() != gram_.dim())
    throw std::invalid_argument("TransformState: M0 dimension mismatch");
  if (gram_.step() != -1)
    throw std::invalid_argument("TransformState: gram state must be freshly initialized");
  for (double v : m_)
    if (!std::isfinite(v)) throw std::invalid_argument("TransformState: non-finite M0");
  m_prev_ = m_;
  last_phi_.assign(m_.size(), 0.0);
}

StepRecord TransformState::advance(std::span<const double> phi, double eps) {
  if (phi.size() != dim()) throw std::invalid_argument("advance: phi dimension mismatch");
  if (!std::isfinite(eps)) throw std::invalid_argument("advance: non-finite eps");

  StepRecord rec;
  rec.n = n_;
  rec.eps = eps;

  // against S_{n-1}
  rec.V = gram_.quadratic_form(m_);
  std::vector<double> im(dim());
  gram_.apply_inverse(m_, im);
  rec.g = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) rec.g += im[i] * phi[i];

  // against S_n
  rec.f = gram_.rank_one_update(phi);
  rec.h = gram_.quadratic_form(m_);
  rec.a1 = rec.V - rec.h;
  rec.log_det = gram_.log_det();

  m_prev_ = m_;
  last_phi_.assign(phi.begin(), phi.end());
  for (std::size_t i = 0; i < dim(); ++i) m_[i] += phi[i] * eps;
  ++n_;
  return rec;
}

LimitTracker::LimitTracker(const SymMatrix& limit, const TransformState& state)
    : l_inv_(limit.dim()), expected_step_(state.step() + 1) {
  if (limit.dim() != state.dim())
    throw std::invalid_argument("LimitTracker: dimension mismatch");
  Cholesky chol(limit);  // rejects a singular / non-SPD L
  l_inv_ = chol.inverse();
  // beta of the design matrix as it stands now
  double t = 0.0;
  const SymMatrix& s = state.gram().design();
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t k = 0; k < s.dim(); ++k) t += l_inv_(i, k) * s(k, i);
  beta_prev_ = t;
}

LimitDiagnostics LimitTracker::observe(const TransformState& state, double alpha_n) {
  if (state.step() != expected_step_)
    throw std::logic_error("LimitTracker: observe must follow each advance exactly once");
  ++expected_step_;
  if (!(alpha_n > 0.0) && alpha_n != 0.0)
    throw std::invalid_argument("LimitTracker: alpha must be nonnegative");

  const std::size_t d = state.dim();
  const SymMatrix& s = state.gram().design();

  LimitDiagnostics diag;
  // trace(L^-1 S_n); equals trace(L^-1/2 S_n L^-1/2) by similarity
  double beta = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) beta += l_inv_(i, k) * s(k, i);
  diag.beta = beta;
  diag.gamma = (beta - beta_prev_) / beta;

  const std::vector<double>& m_n = state.last_m();
  const std::vector<double>& phi_n = state.last_phi();
  std::vector<double> lm(d), lp(d);
  l_inv_.multiply(m_n, lm);
  l_inv_.multiply(phi_n, lp);
  double mlm = 0.0, mlp = 0.0, plp = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    mlm += m_n[i] * lm[i];
    mlp += m_n[i] * lp[i];
    plp += phi_n[i] * lp[i];
  }
  diag.m = mlm / beta_prev_;
  diag.delta = mlp / beta;
  diag.varphi = alpha_n > 0.0 ? plp / alpha_n : std::nan("");
  diag.v = alpha_prev_ > 0.0 ? mlm / alpha_prev_ : std::nan("");

  beta_prev_ = beta;
  alpha_prev_ = alpha_n;
  return diag;
}

std::string step_record_csv_header() { return "n,f,V,g,h,a1,log_det,eps"; }

std::string step_record_csv_row(const StepRecord& rec) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%lld,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g",
                static_cast<long long>(rec.n), rec.f, rec.V, rec.g, rec.h, rec.a1, rec.log_det,
                rec.eps);
  return buf;
}

}  // namespace asclt
