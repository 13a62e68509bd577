// Weighted empirical distribution of the normalized transform, compared to
// its Gaussian limit through a sup-distance over the bin grid.

#ifndef ASCLT_HISTOGRAM_HPP
#define ASCLT_HISTOGRAM_HPP

#include <vector>

namespace asclt {

double gaussian_cdf(double x, double sigma2);

/// Histogram over a uniform edge grid with one underflow and one overflow
/// bin. The default grid spans [-6 sigma, 6 sigma] in 201 edges (resolution
/// 0.06 sigma).
class WeightedHistogram {
 public:
  static WeightedHistogram default_grid(double sigma2, int edge_count = 201,
                                        double range_sigmas = 6.0);
  explicit WeightedHistogram(std::vector<double> edges);

  void add(double x, double weight);
  void merge(const WeightedHistogram& other);

  double total_weight() const { return total_weight_; }
  const std::vector<double>& edges() const { return edges_; }
  const std::vector<double>& weights() const { return weights_; }

  /// sup over bin edges of |weighted empirical CDF - N(0, sigma2) CDF|.
  /// Throws when no weight has been added.
  double ks_vs_gaussian(double sigma2) const;

 private:
  std::vector<double> edges_;    // sorted, size m
  std::vector<double> weights_;  // size m+1, weights_[0] below edges_[0]
  double total_weight_ = 0.0;
};

}  // namespace asclt

#endif
