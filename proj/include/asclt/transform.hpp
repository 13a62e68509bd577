// Vector martingale transform M_n = M_0 + sum_{k<n} phi_k eps_{k+1} driven
// one step at a time against a GramState, with the per-step quantities the
// log-averaged moment statistics consume.
//
// Evaluation order inside a step is part of the contract: V_n and g_n use
// the inverse of S_{n-1}, f_n and h_n use the inverse of S_n after the
// rank-one update, and only then does M advance. Riccati's update formula
// then makes a_n(1) = V_n - h_n = (1 - f_n) g_n^2 an exact identity.

#ifndef ASCLT_TRANSFORM_HPP
#define ASCLT_TRANSFORM_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asclt/gram.hpp"

namespace asclt {

/// Everything computed at one step of the transform.
struct StepRecord {
  std::int64_t n = 0;   // step index, from 0
  double f = 0.0;       // explosion coefficient phi^T S_n^-1 phi
  double V = 0.0;       // M_n^T S_{n-1}^-1 M_n
  double g = 0.0;       // M_n^T S_{n-1}^-1 phi_n
  double h = 0.0;       // M_n^T S_n^-1 M_n
  double a1 = 0.0;      // V - h
  double log_det = 0.0; // log det(S_n) after the update
  double eps = 0.0;     // noise eps_{n+1}
  std::optional<double> pi;  // prediction gap, attached by estimators
};

struct IdentityResidual {
  std::string name;
  double residual = 0.0;  // relative to the magnitudes involved
};

/// Relative residuals of the per-step Riccati identities. The second entry
/// appears only when a prediction gap pi is attached to the record.
std::vector<IdentityResidual> check_step_identities(const StepRecord& rec);

class TransformState {
 public:
  /// Takes ownership of a freshly initialized gram state (step() == -1).
  TransformState(std::vector<double> m0, GramState gram);

  std::size_t dim() const { return gram_.dim(); }
  std::int64_t step() const { return n_; }
  const std::vector<double>& m() const { return m_; }
  const GramState& gram() const { return gram_; }

  /// M the step started from and the phi it consumed; defined after the
  /// first advance. Mid-step values needed by the limit diagnostics.
  const std::vector<double>& last_m() const { return m_prev_; }
  const std::vector<double>& last_phi() const { return last_phi_; }

  StepRecord advance(std::span<const double> phi, double eps);

 private:
  std::vector<double> m_;
  std::vector<double> m_prev_;
  std::vector<double> last_phi_;
  GramState gram_;
  std::int64_t n_ = 0;
};

/// Proof-side normalized quantities of one step, relative to the limiting
/// matrix L and the model's normalization alpha_n.
struct LimitDiagnostics {
  double beta = 0.0;    // trace(L^-1 S_n)
  double gamma = 0.0;   // (beta_n - beta_{n-1}) / beta_n
  double m = 0.0;       // beta_{n-1}^-1 M_n^T L^-1 M_n
  double delta = 0.0;   // M_n^T L^-1 phi_n / beta_n
  double varphi = 0.0;  // alpha_n^-1 phi_n^T L^-1 phi_n
  double v = 0.0;       // alpha_{n-1}^-1 M_n^T L^-1 M_n
};

/// Stateful companion of a TransformState: caches beta_{n-1} and alpha_{n-1}
/// between calls so gamma, m and v can be formed. Call observe() exactly
/// once after each advance.
class LimitTracker {
 public:
  /// Binds to the state as it currently stands; rejects a singular
  /// (non-SPD) L.
  LimitTracker(const SymMatrix& limit, const TransformState& state);

  LimitDiagnostics observe(const TransformState& state, double alpha_n);

 private:
  SymMatrix l_inv_;
  double beta_prev_;
  double alpha_prev_ = -1.0;
  std::int64_t expected_step_;
};

std::string step_record_csv_header();
std::string step_record_csv_row(const StepRecord& rec);

}  // namespace asclt

#endif
