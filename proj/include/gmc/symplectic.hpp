#pragma once

#include <Eigen/Dense>
#include <vector>

namespace gmc {

// Conventions shared by every module: canonical ordering is xxpp,
// R = (x_1..x_n, p_1..p_n), the symplectic form is [[0, I], [-I, 0]],
// the vacuum covariance matrix is the identity and Tr(sigma) is the energy
// (single-mode vacuum energy 2).

inline constexpr double kSymmetryTol = 1e-10;   // structural identities
inline constexpr double kPhysicalityTol = 1e-8;  // uncertainty relation
inline constexpr double kPurityTol = 1e-8;       // default purity check

/// Omega with Omega_{jk} = delta_{j+n,k} - delta_{j,k+n}.
Eigen::MatrixXd symplectic_form(int n);

/// Real symmetric 2n x 2n matrix of second moments in xxpp ordering.
class CovarianceMatrix {
 public:
  /// Validates shape, symmetry (1e-10) and Tr >= 2n.
  explicit CovarianceMatrix(Eigen::MatrixXd entries);

  static CovarianceMatrix vacuum(int n);

  int modes() const { return n_; }
  const Eigen::MatrixXd& entries() const { return m_; }
  double operator()(int j, int k) const { return m_(j, k); }

  /// Tr(sigma).
  double energy() const { return m_.trace(); }

 private:
  int n_;
  Eigen::MatrixXd m_;
};

/// Strictly increasing, distinct 0-based mode indices; non-empty.
class ReductionSpec {
 public:
  ReductionSpec(std::vector<int> modes, int n);
  const std::vector<int>& modes() const { return modes_; }
  int size() const { return static_cast<int>(modes_.size()); }

 private:
  std::vector<int> modes_;
};

/// Complement of `spec` within [0, n).
ReductionSpec complement(const ReductionSpec& spec, int n);

/// Rows/columns {j, j+n} of sigma for j in spec, re-indexed to xxpp on
/// m = spec.size() modes.
CovarianceMatrix partial_trace(const CovarianceMatrix& sigma, const ReductionSpec& spec);

/// Symplectic eigenvalues nu_k, descending, clamped to >= 1. Values below
/// 1 - kPhysicalityTol raise std::domain_error.
Eigen::VectorXd symplectic_spectrum(const CovarianceMatrix& sigma);

/// Entropy (bits) of one mode with symplectic eigenvalue nu:
/// (nu+1)/2 log2((nu+1)/2) - (nu-1)/2 log2((nu-1)/2), continuously extended
/// to 0 at nu = 1. Inputs in [1 - 1e-8, 1) are clamped to 1; smaller values
/// raise std::domain_error.
double mode_entropy(double nu);

/// Sum of mode_entropy over the symplectic spectrum (bits).
double von_neumann_entropy(const CovarianceMatrix& sigma);

/// True iff max-norm of sigma^T Omega sigma - Omega <= tol.
bool is_pure(const CovarianceMatrix& sigma, double tol = kPurityTol);

/// Overlap of a pure single-mode state with an arbitrary single-mode state,
/// both zero-mean: 2 / sqrt(det(sigma_a + sigma_b)).
double fidelity_pure_single_mode(const CovarianceMatrix& sigma_a,
                                 const CovarianceMatrix& sigma_b);

/// [[cos a, -sin a], [sin a, cos a]].
Eigen::Matrix2d rotation2(double angle);

/// R(angle) diag(zsq, 1/zsq) R(angle)^T: single-mode squeezed CM.
Eigen::Matrix2d squeezed_cm_2d(double zsq, double angle);

}  // namespace gmc
