#include "gmc/haar.hpp"

#include <fmt/format.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "gmc/microcanonical.hpp"
#include "gmc/parallel.hpp"
#include "gmc/symplectic.hpp"

namespace gmc {

HaarUnitary sample_unitary(int n, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("sample_unitary: n must be >= 1");
  Eigen::MatrixXcd g(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) g(j, k) = rng.complex_normal();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    std::complex<double> d = r(k, k);
    double mag = std::abs(d);
    std::complex<double> phase = mag > 0.0 ? d / mag : std::complex<double>(1.0, 0.0);
    q.col(k) *= phase;
  }
  return {q.real(), q.imag()};
}

CompactSymplectic::CompactSymplectic(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows() || x.rows() < 1)
    throw std::invalid_argument("CompactSymplectic: X and Y must be square of equal size");
  n_ = static_cast<int>(x.rows());
  Eigen::MatrixXd gram = x.transpose() * x + y.transpose() * y;
  Eigen::MatrixXd skew = x.transpose() * y - y.transpose() * x;
  double dev = (gram - Eigen::MatrixXd::Identity(n_, n_)).cwiseAbs().maxCoeff();
  dev = std::max(dev, skew.cwiseAbs().maxCoeff());
  if (dev > 1e-8)
    throw std::invalid_argument(
        fmt::format("CompactSymplectic: X + iY not unitary (deviation {:.3e})", dev));
  o_.resize(2 * n_, 2 * n_);
  o_.topLeftCorner(n_, n_) = x;
  o_.topRightCorner(n_, n_) = y;
  o_.bottomLeftCorner(n_, n_) = -y;
  o_.bottomRightCorner(n_, n_) = x;
}

CompactSymplectic embed_compact(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  return CompactSymplectic(x, y);
}

CompactSymplectic sample_compact_symplectic(int n, RngStream& rng) {
  HaarUnitary u = sample_unitary(n, rng);
  return CompactSymplectic(u.x, u.y);
}

HaarAverageReport haar_average_cm_check(const EnergyVector& energies,
                                        std::int64_t samples, std::uint64_t seed,
                                        int workers) {
  if (samples < 1) throw std::invalid_argument("haar_average_cm_check: samples must be >= 1");
  int n = energies.modes();
  int d = 2 * n;
  Eigen::VectorXd diag(2 * n);
  Eigen::VectorXd zsq = squeezings_from_energies(energies).array().square();
  diag.head(n) = zsq;
  diag.tail(n) = zsq.cwiseInverse();

  struct Acc {
    Eigen::MatrixXd sum, sumsq;
    std::int64_t count = 0;
  };
  std::vector<Acc> parts(chunk_count(samples));
  for (auto& p : parts) {
    p.sum = Eigen::MatrixXd::Zero(d, d);
    p.sumsq = Eigen::MatrixXd::Zero(d, d);
  }

  for_each_chunk(samples, workers, [&](std::size_t ci, std::int64_t b, std::int64_t e) {
    Acc& acc = parts[ci];
    for (std::int64_t i = b; i < e; ++i) {
      RngStream rng(seed, static_cast<std::uint64_t>(i));
      CompactSymplectic o = sample_compact_symplectic(n, rng);
      Eigen::MatrixXd sigma = o.matrix().transpose() * diag.asDiagonal() * o.matrix();
      acc.sum += sigma;
      acc.sumsq += sigma.cwiseProduct(sigma);
      ++acc.count;
    }
  });

  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(d, d);
  Eigen::MatrixXd sumsq = Eigen::MatrixXd::Zero(d, d);
  for (const auto& p : parts) {
    sum += p.sum;
    sumsq += p.sumsq;
  }

  double ns = static_cast<double>(samples);
  Eigen::MatrixXd mean = sum / ns;
  Eigen::MatrixXd second = sumsq / ns;
  Eigen::MatrixXd var = (second - mean.cwiseProduct(mean)) * (ns / std::max(ns - 1.0, 1.0));
  Eigen::MatrixXd se = (var / ns).cwiseMax(0.0).cwiseSqrt();

  HaarAverageReport rep;
  rep.samples = samples;
  rep.target_mean = energies.values().sum() / (2.0 * n);
  double diag_sm = 0.0, off_sm = 0.0;
  int off_count = 0;
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      if (j == k) {
        double dev = std::abs(mean(j, j) - rep.target_mean);
        rep.max_diag_dev = std::max(rep.max_diag_dev, dev);
        if (se(j, j) > 0.0)
          rep.max_diag_dev_se = std::max(rep.max_diag_dev_se, dev / se(j, j));
        diag_sm += second(j, j);
      } else {
        double dev = std::abs(mean(j, k));
        rep.max_abs_mean_offdiag = std::max(rep.max_abs_mean_offdiag, dev);
        if (se(j, k) > 0.0)
          rep.max_offdiag_dev_se = std::max(rep.max_offdiag_dev_se, dev / se(j, k));
        if (j < k) {
          off_sm += second(j, k);
          ++off_count;
        }
      }
    }
  }
  rep.mean_diag_second_moment = diag_sm / d;
  rep.mean_offdiag_second_moment = off_count > 0 ? off_sm / off_count : 0.0;
  rep.suppression_ratio = rep.mean_diag_second_moment > 0.0
                              ? rep.mean_offdiag_second_moment / rep.mean_diag_second_moment
                              : 0.0;
  return rep;
}

}  // namespace gmc
