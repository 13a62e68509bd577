// Martingale-difference noise families. Every family has mean zero,
// conditional variance exactly sigma2, and finite moments of all orders.

#ifndef ASCLT_NOISE_HPP
#define ASCLT_NOISE_HPP

#include <string>

#include "asclt/rng.hpp"

namespace asclt {

enum class NoiseFamily { kGaussian, kRademacher, kUniform, kShiftedExponential };

NoiseFamily noise_family_from_string(const std::string& name);
std::string to_string(NoiseFamily family);

struct NoiseSpec {
  NoiseFamily family = NoiseFamily::kGaussian;
  double sigma2 = 1.0;
  double moment_order_a = 8.0;  // the conditional moment order the run relies on

  void validate() const;
};

double draw_noise(const NoiseSpec& spec, RngStream& rng);

/// E[eps^{2q}] in closed form. Shifted-exponential central moments are the
/// derangement numbers.
double noise_even_moment(const NoiseSpec& spec, int q);

}  // namespace asclt

#endif
