// Log-averaged even-moment statistics and their closed-form targets.
//
// The running sums are normalized by the growth of log det(S_n) above the
// prior's log-determinant, so short runs are not biased by the regularizer.
// Accumulators from independent replications merge by adding sums and
// normalization weights, which makes the merged report the weighted mean of
// the individual reports.

#ifndef ASCLT_MOMENTS_HPP
#define ASCLT_MOMENTS_HPP

#include <cstdint>
#include <optional>

#include "asclt/transform.hpp"

namespace asclt {

/// d sigma^{2p} prod_{j=1}^{p-1} (d + 2j): the 2p-th moment of the norm of a
/// N(0, sigma^2 I_d) vector. Integer arithmetic before the sigma power.
double target_ell(int p, int d, double sigma2);

/// (p/d) * ell(p).
double target_lambda(int p, int d, double sigma2);

/// sigma^{2p} (2p)! / (2^p p!), the 2p-th moment of N(0, sigma^2).
double gaussian_even_moment(int p, double sigma2);

struct MomentReport {
  double avg_fV = 0.0;       // (1/log d_n) sum f_k V_k^p
  double avg_ap = 0.0;       // (1/log d_n) sum (V_k^p - h_k^p)
  double avg_a1p = 0.0;      // (1/log d_n) sum (a_k(1))^p
  double avg_scalar = 0.0;   // scalar-path statistic, d=1 runs only
  double target_ell = 0.0;
  double target_lambda = 0.0;
  double rel_err_ell = 0.0;
  double rel_err_lambda = 0.0;
  bool insufficient_data = false;  // no log-determinant growth yet
};

class MomentAccumulator {
 public:
  /// prior_log_det is subtracted from the normalizer; pass
  /// gram.prior_log_det() of the stream being consumed.
  MomentAccumulator(int p, int d, double sigma2, double prior_log_det);

  int p() const { return p_; }
  int d() const { return d_; }
  double sigma2() const { return sigma2_; }
  std::int64_t count() const { return k_count_; }
  double weight() const;  // current normalizer log d_n - log d_prior

  void accumulate(const StepRecord& rec);

  /// Adds f * (msq_over_s)^p to the independently tracked scalar-path sum.
  void accumulate_scalar(double f, double msq_over_s);

  MomentReport report() const;

  /// Cross-replication reduction: sums and normalization weights add, so
  /// the merged report is the weight-averaged report. The result no longer
  /// accepts accumulate().
  static MomentAccumulator merge(const MomentAccumulator& a, const MomentAccumulator& b);

 private:
  int p_;
  int d_;
  double sigma2_;
  double prior_log_det_;
  double log_det_;
  double sum_fV_ = 0.0;
  double sum_ap_ = 0.0;
  double sum_a1p_ = 0.0;
  double sum_scalar_ = 0.0;
  std::int64_t k_count_ = 0;
  bool merged_ = false;
  double merged_weight_ = 0.0;
};

}  // namespace asclt

#endif
