#include "asclt/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace asclt {

namespace {

void require_moment_args(int p, int d) {
  if (p < 1) throw std::invalid_argument("moment order p must be >= 1");
  if (d < 1) throw std::invalid_argument("dimension d must be >= 1");
}

double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

}  // namespace

double target_ell(int p, int d, double sigma2) {
  require_moment_args(p, d);
  if (!(sigma2 > 0.0)) throw std::invalid_argument("sigma2 must be positive");
  double product = d;  // exact in double well past any practical (p, d)
  for (int j = 1; j <= p - 1; ++j) product *= d + 2 * j;
  return product * ipow(sigma2, p);
}

double target_lambda(int p, int d, double sigma2) {
  require_moment_args(p, d);
  if (!(sigma2 > 0.0)) throw std::invalid_argument("sigma2 must be positive");
  double product = p;  // (p/d) * ell(p) with the leading d cancelled
  for (int j = 1; j <= p - 1; ++j) product *= d + 2 * j;
  return product * ipow(sigma2, p);
}

double gaussian_even_moment(int p, double sigma2) {
  require_moment_args(p, 1);
  if (!(sigma2 > 0.0)) throw std::invalid_argument("sigma2 must be positive");
  double dfact = 1.0;  // (2p-1)!!
  for (int j = 1; j <= p; ++j) dfact *= 2 * j - 1;
  return dfact * ipow(sigma2, p);
}

MomentAccumulator::MomentAccumulator(int p, int d, double sigma2, double prior_log_det)
    : p_(p), d_(d), sigma2_(sigma2), prior_log_det_(prior_log_det), log_det_(prior_log_det) {
  require_moment_args(p, d);
  if (!(sigma2 > 0.0)) throw std::invalid_argument("sigma2 must be positive");
}

double MomentAccumulator::weight() const {
  return merged_ ? merged_weight_ : log_det_ - prior_log_det_;
}

void MomentAccumulator::accumulate(const StepRecord& rec) {
  if (merged_) throw std::logic_error("MomentAccumulator: merged accumulators are read-only");
  sum_fV_ += rec.f * ipow(rec.V, p_);
  sum_ap_ += ipow(rec.V, p_) - ipow(rec.h, p_);
  sum_a1p_ += ipow(rec.a1, p_);
  log_det_ = rec.log_det;
  ++k_count_;
}

void MomentAccumulator::accumulate_scalar(double f, double msq_over_s) {
  if (merged_) throw std::logic_error("MomentAccumulator: merged accumulators are read-only");
  sum_scalar_ += f * ipow(msq_over_s, p_);
}

MomentReport MomentAccumulator::report() const {
  MomentReport rep;
  rep.target_ell = target_ell(p_, d_, sigma2_);
  rep.target_lambda = target_lambda(p_, d_, sigma2_);
  const double w = weight();
  if (!(w > 0.0)) {
    rep.insufficient_data = true;
    rep.rel_err_ell = 1.0;
    rep.rel_err_lambda = 1.0;
    return rep;
  }
  rep.avg_fV = sum_fV_ / w;
  rep.avg_ap = sum_ap_ / w;
  rep.avg_a1p = sum_a1p_ / w;
  rep.avg_scalar = sum_scalar_ / w;
  rep.rel_err_ell = std::abs(rep.avg_fV - rep.target_ell) / rep.target_ell;
  rep.rel_err_lambda = std::abs(rep.avg_ap - rep.target_lambda) / rep.target_lambda;
  return rep;
}

MomentAccumulator MomentAccumulator::merge(const MomentAccumulator& a, const MomentAccumulator& b) {
  if (a.p_ != b.p_ || a.d_ != b.d_ || a.sigma2_ != b.sigma2_)
    throw std::invalid_argument("MomentAccumulator::merge: configuration mismatch");
  MomentAccumulator out(a.p_, a.d_, a.sigma2_, 0.0);
  out.merged_ = true;
  out.merged_weight_ = a.weight() + b.weight();
  out.sum_fV_ = a.sum_fV_ + b.sum_fV_;
  out.sum_ap_ = a.sum_ap_ + b.sum_ap_;
  out.sum_a1p_ = a.sum_a1p_ + b.sum_a1p_;
  out.sum_scalar_ = a.sum_scalar_ + b.sum_scalar_;
  out.k_count_ = a.k_count_ + b.k_count_;
  return out;
}

}  // namespace asclt
