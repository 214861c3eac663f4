#include "gmc/symplectic.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gmc {

Eigen::MatrixXd symplectic_form(int n) {
  if (n < 1) throw std::invalid_argument("symplectic_form: n must be >= 1");
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  omega.topRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  omega.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  return omega;
}

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols() || m_.rows() < 2 || m_.rows() % 2 != 0)
    throw std::invalid_argument("CovarianceMatrix: entries must be 2n x 2n");
  n_ = static_cast<int>(m_.rows()) / 2;
  double asym = (m_ - m_.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol)
    throw std::invalid_argument(
        fmt::format("CovarianceMatrix: not symmetric (max asymmetry {:.3e})", asym));
  if (m_.trace() < 2.0 * n_ - 1e-9)
    throw std::invalid_argument(
        fmt::format("CovarianceMatrix: energy {:.6g} below vacuum energy {}", m_.trace(), 2 * n_));
}

CovarianceMatrix CovarianceMatrix::vacuum(int n) {
  if (n < 1) throw std::invalid_argument("CovarianceMatrix::vacuum: n must be >= 1");
  return CovarianceMatrix(Eigen::MatrixXd::Identity(2 * n, 2 * n));
}

ReductionSpec::ReductionSpec(std::vector<int> modes, int n) : modes_(std::move(modes)) {
  if (modes_.empty()) throw std::invalid_argument("ReductionSpec: empty mode list");
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    if (modes_[i] < 0 || modes_[i] >= n)
      throw std::out_of_range(
          fmt::format("ReductionSpec: mode {} out of range [0, {})", modes_[i], n));
    if (i > 0 && modes_[i] <= modes_[i - 1])
      throw std::invalid_argument("ReductionSpec: modes must be strictly increasing");
  }
}

ReductionSpec complement(const ReductionSpec& spec, int n) {
  std::vector<int> out;
  std::size_t k = 0;
  for (int j = 0; j < n; ++j) {
    if (k < spec.modes().size() && spec.modes()[k] == j) {
      ++k;
      continue;
    }
    out.push_back(j);
  }
  return ReductionSpec(std::move(out), n);
}

CovarianceMatrix partial_trace(const CovarianceMatrix& sigma, const ReductionSpec& spec) {
  int n = sigma.modes();
  int m = spec.size();
  if (spec.modes().back() >= n)
    throw std::out_of_range("partial_trace: spec exceeds mode count");
  Eigen::MatrixXd out(2 * m, 2 * m);
  const auto& s = sigma.entries();
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      int ja = spec.modes()[static_cast<std::size_t>(a)];
      int jb = spec.modes()[static_cast<std::size_t>(b)];
      out(a, b) = s(ja, jb);
      out(a, b + m) = s(ja, jb + n);
      out(a + m, b) = s(ja + n, jb);
      out(a + m, b + m) = s(ja + n, jb + n);
    }
  }
  return CovarianceMatrix(std::move(out));
}

Eigen::VectorXd symplectic_spectrum(const CovarianceMatrix& sigma) {
  int n = sigma.modes();
  Eigen::VectorXd nus(n);
  if (n == 1) {
    double det = sigma.entries().determinant();
    if (det < 0.0 && det > -1e-12) det = 0.0;
    nus(0) = std::sqrt(std::max(det, 0.0));
  } else {
    // nu_k are the singular values of sqrt(sigma) Omega sqrt(sigma), each
    // appearing twice; equivalently sqrt of the eigenvalues of A^T A.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sigma.entries());
    if (es.info() != Eigen::Success)
      throw std::runtime_error("symplectic_spectrum: eigendecomposition failed");
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    Eigen::MatrixXd root = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
    Eigen::MatrixXd a = root * symplectic_form(n) * root;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es2(a.transpose() * a);
    if (es2.info() != Eigen::Success)
      throw std::runtime_error("symplectic_spectrum: eigendecomposition failed");
    Eigen::VectorXd lam = es2.eigenvalues().cwiseMax(0.0);  // ascending, pairs
    for (int k = 0; k < n; ++k) {
      double pair = 0.5 * (lam(2 * k) + lam(2 * k + 1));
      nus(n - 1 - k) = std::sqrt(pair);
    }
  }
  for (int k = 0; k < n; ++k) {
    if (nus(k) < 1.0 - kPhysicalityTol)
      throw std::domain_error(fmt::format(
          "symplectic_spectrum: non-physical covariance matrix (nu = {:.12g})", nus(k)));
    nus(k) = std::max(nus(k), 1.0);
  }
  std::sort(nus.data(), nus.data() + n, std::greater<double>());
  return nus;
}

double mode_entropy(double nu) {
  if (nu < 1.0 - kPhysicalityTol)
    throw std::domain_error(fmt::format("mode_entropy: nu = {:.12g} below 1", nu));
  if (nu <= 1.0) return 0.0;
  double xp = (nu + 1.0) / 2.0;
  double xm = (nu - 1.0) / 2.0;
  double term = xm > 0.0 ? xm * std::log2(xm) : 0.0;
  return xp * std::log2(xp) - term;
}

double von_neumann_entropy(const CovarianceMatrix& sigma) {
  Eigen::VectorXd nus = symplectic_spectrum(sigma);
  double s = 0.0;
  for (int k = 0; k < nus.size(); ++k) s += mode_entropy(nus(k));
  return s;
}

bool is_pure(const CovarianceMatrix& sigma, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("is_pure: tol must be positive");
  Eigen::MatrixXd omega = symplectic_form(sigma.modes());
  Eigen::MatrixXd resid = sigma.entries().transpose() * omega * sigma.entries() - omega;
  return resid.cwiseAbs().maxCoeff() <= tol;
}

double fidelity_pure_single_mode(const CovarianceMatrix& sigma_a,
                                 const CovarianceMatrix& sigma_b) {
  if (sigma_a.modes() != 1 || sigma_b.modes() != 1)
    throw std::invalid_argument("fidelity_pure_single_mode: single-mode states only");
  double det_a = sigma_a.entries().determinant();
  if (std::abs(det_a - 1.0) > 1e-6)
    throw std::domain_error(
        fmt::format("fidelity_pure_single_mode: first argument not pure (det {:.9g})", det_a));
  double det = (sigma_a.entries() + sigma_b.entries()).determinant();
  return 2.0 / std::sqrt(det);
}

Eigen::Matrix2d rotation2(double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

Eigen::Matrix2d squeezed_cm_2d(double zsq, double angle) {
  if (zsq <= 0.0) throw std::invalid_argument("squeezed_cm_2d: zsq must be positive");
  double c = std::cos(angle), s = std::sin(angle);
  double iz = 1.0 / zsq;
  Eigen::Matrix2d m;
  m(0, 0) = c * c * zsq + s * s * iz;
  m(1, 1) = s * s * zsq + c * c * iz;
  m(0, 1) = m(1, 0) = c * s * (zsq - iz);
  return m;
}

}  // namespace gmc
