#include "asclt/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace asclt {

double gaussian_cdf(double x, double sigma2) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0 * sigma2));
}

WeightedHistogram WeightedHistogram::default_grid(double sigma2, int edge_count,
                                                  double range_sigmas) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("histogram: sigma2 must be positive");
  if (edge_count < 2) throw std::invalid_argument("histogram: need at least two edges");
  const double sigma = std::sqrt(sigma2);
  std::vector<double> edges(edge_count);
  const double lo = -range_sigmas * sigma, hi = range_sigmas * sigma;
  for (int i = 0; i < edge_count; ++i)
    edges[i] = lo + (hi - lo) * static_cast<double>(i) / (edge_count - 1);
  return WeightedHistogram(std::move(edges));
}

WeightedHistogram::WeightedHistogram(std::vector<double> edges) : edges_(std::move(edges)) {
  if (edges_.size() < 2) throw std::invalid_argument("histogram: need at least two edges");
  if (!std::is_sorted(edges_.begin(), edges_.end()))
    throw std::invalid_argument("histogram: edges must be sorted");
  weights_.assign(edges_.size() + 1, 0.0);
}

void WeightedHistogram::add(double x, double weight) {
  if (!(weight >= 0.0)) throw std::invalid_argument("histogram: negative weight");
  // bin k holds mass from [edge_{k-1}, edge_k)
  const auto it = std::upper_bound(edges_.begin(), edges_.end(), x);
  weights_[static_cast<std::size_t>(it - edges_.begin())] += weight;
  total_weight_ += weight;
}

void WeightedHistogram::merge(const WeightedHistogram& other) {
  if (other.edges_ != edges_) throw std::invalid_argument("histogram: incompatible grids");
  for (std::size_t i = 0; i < weights_.size(); ++i) weights_[i] += other.weights_[i];
  total_weight_ += other.total_weight_;
}

double WeightedHistogram::ks_vs_gaussian(double sigma2) const {
  if (!(total_weight_ > 0.0)) throw std::runtime_error("histogram: empty");
  double cum = 0.0, ks = 0.0;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    cum += weights_[i];  // all mass strictly below edges_[i]
    const double diff = std::abs(cum / total_weight_ - gaussian_cdf(edges_[i], sigma2));
    ks = std::max(ks, diff);
  }
  return ks;
}

}  // namespace asclt
