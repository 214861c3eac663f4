#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "gmc/rng.hpp"
#include "gmc/stats.hpp"

namespace gmc {

class EnergyVector;

/// Real and imaginary parts of an n x n unitary U = X + iY.
struct HaarUnitary {
  Eigen::MatrixXd x;
  Eigen::MatrixXd y;
};

/// Haar-distributed U(n) element: Ginibre matrix, QR factorization, column
/// phases fixed so the triangular factor has positive real diagonal.
HaarUnitary sample_unitary(int n, RngStream& rng);

/// Orthogonal symplectic matrix [[X, Y], [-Y, X]], the image of a unitary
/// X + iY under the U(n) isomorphism with K(n) = Sp(2n,R) ∩ SO(2n).
class CompactSymplectic {
 public:
  /// Validates that x + iy is unitary within 1e-8.
  CompactSymplectic(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y);

  int modes() const { return n_; }
  const Eigen::MatrixXd& matrix() const { return o_; }

 private:
  int n_;
  Eigen::MatrixXd o_;
};

CompactSymplectic embed_compact(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y);

CompactSymplectic sample_compact_symplectic(int n, RngStream& rng);

/// Statistics of sigma = O^T (Z^2 ⊕ Z^-2) O over Haar draws of O at fixed
/// local energies, against the exact mean (sum E_l / 2n) delta_jk and the
/// leading-order second-moment prediction (sum E_l / 2n)^2 delta_jk.
struct HaarAverageReport {
  std::int64_t samples = 0;
  double target_mean = 0.0;          // sum E_l / 2n
  double max_abs_mean_offdiag = 0.0;  // max |mean sigma_jk|, j != k
  double max_offdiag_dev_se = 0.0;    // that deviation in standard errors
  double max_diag_dev = 0.0;          // max |mean sigma_jj - target|
  double max_diag_dev_se = 0.0;
  double mean_diag_second_moment = 0.0;     // mean over j of mean(sigma_jj^2)
  double mean_offdiag_second_moment = 0.0;  // mean over j<k of mean(sigma_jk^2)
  double suppression_ratio = 0.0;  // offdiag / diag second moments
};

HaarAverageReport haar_average_cm_check(const EnergyVector& energies,
                                        std::int64_t samples, std::uint64_t seed,
                                        int workers = 0);

}  // namespace gmc
