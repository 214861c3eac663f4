#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "gmc/symplectic.hpp"

namespace gmc {

/// Fit constant for the heterodyne threshold: 1 - k asinh(sqrt(E - 2)).
inline constexpr double kClassicalFitSlope = 0.317576;
double classical_fit_value(double budget);

/// Outcome density of heterodyne detection on a zero-mean single-mode state:
/// N(0, sigma + I) in the vacuum-=-identity convention.
double heterodyne_density(const Eigen::Vector2d& m, const CovarianceMatrix& sigma_in);

struct QuadratureSpec {
  int energy_nodes = 64;
  int angle_nodes = 64;
};

/// Tensor Gauss-Legendre tables over the input alphabet (E1, theta) for a
/// fixed budget. The energy leg uses the substitution E1 = 2 + (E-2) t^2,
/// which removes the square-root behavior of z(E1) at E1 = 2.
class PosteriorGrid {
 public:
  PosteriorGrid(double budget, QuadratureSpec spec = {});

  double budget() const { return budget_; }
  int size() const { return static_cast<int>(wq_.size()); }

  /// Outcome-weighted quadrature weights for a fixed heterodyne outcome.
  void weights_at(const Eigen::Vector2d& m, std::vector<double>& w) const;

  /// g restricted to squeezed replies R(chi) diag(z2, 1/z2) R(chi)^T.
  double objective_with(const std::vector<double>& w, double zeta_sq, double chi) const;

  /// g for an arbitrary symmetric 2x2 reply.
  double objective(const std::vector<double>& w, const Eigen::Matrix2d& reply) const;

  /// Expected fidelity of a fixed reply, ignoring the outcome (the blind
  /// strategy average; lower-bounds every policy value).
  double blind_average(const Eigen::Matrix2d& reply) const;

 private:
  double budget_;
  std::vector<double> a_, b_, d_;          // input CM entries per node
  std::vector<double> ica_, icb_, icd_;    // (sigma + I)^{-1} entries
  std::vector<double> wq_;                 // joint weight x outcome-density norm
  std::vector<double> w_plain_;            // joint weight without density
};

/// g(m, sigma_B): quadrature average over the alphabet of
/// heterodyne_density(m | sigma_in) * fidelity(sigma_in, sigma_B).
/// Maximizing it pointwise in m maximizes the global average.
double posterior_objective(const Eigen::Vector2d& m, const CovarianceMatrix& sigma_b,
                           double budget, QuadratureSpec spec = {});

struct PolicyNode {
  double rho = 0.0;
  double zeta = 1.0;   // reply squeezing, >= 1
  double chi = 0.0;    // reply angle relative to the outcome direction, [0, pi)
  double value = 0.0;  // optimized g at this node
  bool flagged = false;
};

/// Radial decision table: reply for outcome m is the node reply at
/// rho = |m|, interpolated piecewise-linearly and rotated by the phase of m.
struct BobPolicy {
  double budget = 0.0;
  double rho_max = 0.0;
  std::vector<PolicyNode> nodes;

  /// Interpolated (zeta, chi) at radius rho (clamped to [0, rho_max]).
  std::pair<double, double> reply_params(double rho) const;
  /// Full reply CM for an arbitrary outcome.
  Eigen::Matrix2d reply(const Eigen::Vector2d& m) const;
};

struct PolicyOptions {
  int nodes = 256;
  QuadratureSpec quad;
  /// Allow replies outside the input alphabet (exploratory; not the
  /// benchmark definition).
  bool relax_energy_bound = false;
  int coarse_zeta = 24;
  int coarse_chi = 16;
  int sweeps = 4;
  int workers = 0;
};

/// Per-node maximization of the posterior objective over (zeta, chi):
/// coarse grid seeding, then coordinate descent with golden-section line
/// searches, with additional starts at chi = 0 and chi = pi/2.
BobPolicy optimize_bob_policy(double budget, const PolicyOptions& options = {});

struct ThresholdEvalOptions {
  QuadratureSpec quad;
  int radial_points = 4;            // GL points per policy segment
  std::int64_t mc_samples = 200000;  // 0 disables the Monte Carlo cross-check
  std::uint64_t seed = 1;
  int workers = 0;
};

struct ThresholdResult {
  double budget = 0.0;
  double value = 0.0;       // quadrature evaluation of the policy average
  double quad_error = 0.0;  // radial-resolution difference estimate
  double mc_mean = 0.0;
  double mc_std_error = 0.0;
  bool mc_checked = false;
  bool mc_consistent = true;
  int flagged_nodes = 0;
};

ThresholdResult classical_average_fidelity(double budget, const BobPolicy& policy,
                                           const ThresholdEvalOptions& options = {});

struct CrossoverOptions {
  double lo = 2.001;
  double hi = 8.0;
  PolicyOptions policy;
  int radial_points = 4;
};

struct CrossoverResult {
  bool found = false;
  bool at_lower_edge = false;  // quantum already ahead at the bracket's low end
  double energy = 0.0;
  double h_lo = 0.0;  // average_fidelity - classical value at the bracket ends
  double h_hi = 0.0;
  int evaluations = 0;
};

/// Bisection for the budget where the teleportation average first matches the
/// classical threshold. No sign change on the bracket yields found = false.
CrossoverResult crossover_energy(double r, double tol, const CrossoverOptions& options = {});

}  // namespace gmc
