#include "gmc/entanglement.hpp"

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gmc/haar.hpp"
#include "gmc/parallel.hpp"

namespace gmc {

namespace {

// Reduced 2x2 block of sigma = O^T D O for one mode, needing only the
// corresponding Haar column u (uniform on the complex unit sphere in C^n):
// columns (Re u; -Im u) and (Im u; Re u) of O.
Eigen::Matrix2d reduced_block_from_column(const Eigen::VectorXd& zsq,
                                          const Eigen::VectorXd& re,
                                          const Eigen::VectorXd& im) {
  double xx = 0.0, pp = 0.0, xp = 0.0;
  int n = static_cast<int>(zsq.size());
  for (int l = 0; l < n; ++l) {
    double z2 = zsq(l), iz2 = 1.0 / zsq(l);
    double r2 = re(l) * re(l), i2 = im(l) * im(l);
    xx += z2 * r2 + iz2 * i2;
    pp += z2 * i2 + iz2 * r2;
    xp += (z2 - iz2) * re(l) * im(l);
  }
  Eigen::Matrix2d g;
  g << xx, xp, xp, pp;
  return g;
}

void sample_sphere_column(int n, RngStream& rng, Eigen::VectorXd& re, Eigen::VectorXd& im) {
  double norm2 = 0.0;
  for (int l = 0; l < n; ++l) {
    re(l) = rng.normal();
    im(l) = rng.normal();
    norm2 += re(l) * re(l) + im(l) * im(l);
  }
  double inv = 1.0 / std::sqrt(norm2);
  re *= inv;
  im *= inv;
}

double single_mode_entropy_from_block(const Eigen::Matrix2d& g) {
  double det = g(0, 0) * g(1, 1) - g(0, 1) * g(0, 1);
  double nu = std::sqrt(std::max(det, 0.0));
  if (nu < 1.0 - kPhysicalityTol)
    throw std::domain_error(fmt::format(
        "entropy_samples: reduced block non-physical (nu = {:.12g})", nu));
  return mode_entropy(std::max(nu, 1.0));
}

}  // namespace

EntropyStats entropy_samples(int m, int n, double budget, std::int64_t samples,
                             const EntropySamplingOptions& options) {
  if (m < 1 || m >= n) throw std::invalid_argument("entropy_samples: m must be < n");
  if (budget < 2.0 * n) throw std::invalid_argument("entropy_samples: infeasible budget");
  if (samples < 1) throw std::invalid_argument("entropy_samples: samples must be >= 1");

  double smax = n >= 2 ? max_single_mode_entropy(n, budget) : 0.0;
  double hist_hi = std::max(smax * std::max(m, 1), 1e-9);
  bool fast = m == 1 && !options.random_mode && !options.full_matrix;

  struct Acc {
    SampleStats stats;
    Histogram hist;
  };
  std::vector<Acc> parts(chunk_count(samples));
  for (auto& p : parts) p.hist = Histogram(0.0, hist_hi, options.histogram_bins);

  for_each_chunk(samples, options.workers, [&](std::size_t ci, std::int64_t b, std::int64_t e) {
    Acc& acc = parts[ci];
    Eigen::VectorXd re(n), im(n);
    for (std::int64_t i = b; i < e; ++i) {
      RngStream rng(options.seed, static_cast<std::uint64_t>(i));
      EnergyVector ev = sample_energy_vector(n, budget, rng, options.variant);
      double s = 0.0;
      if (fast) {
        Eigen::VectorXd zsq = squeezings_from_energies(ev).array().square();
        sample_sphere_column(n, rng, re, im);
        s = single_mode_entropy_from_block(reduced_block_from_column(zsq, re, im));
      } else {
        CompactSymplectic o = sample_compact_symplectic(n, rng);
        CovarianceMatrix sigma = pure_cm(ev, o);
        int first = 0;
        if (options.random_mode)
          first = static_cast<int>(rng.uniform() * n) % n;
        std::vector<int> modes(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) modes[static_cast<std::size_t>(k)] = (first + k) % n;
        std::sort(modes.begin(), modes.end());
        s = von_neumann_entropy(partial_trace(sigma, ReductionSpec(modes, n)));
      }
      acc.stats.add(s);
      acc.hist.add(s);
    }
  });

  EntropyStats out;
  out.m = m;
  out.n = n;
  out.budget = budget;
  out.smax = smax;
  out.histogram = Histogram(0.0, hist_hi, options.histogram_bins);
  for (const auto& p : parts) {
    out.entropy.merge(p.stats);
    out.histogram.merge(p.hist);
  }
  return out;
}

double thermal_entropy_prediction(int m, double temperature) {
  if (m < 1) throw std::invalid_argument("thermal_entropy_prediction: m must be >= 1");
  if (temperature < 0.0)
    throw std::domain_error("thermal_entropy_prediction: temperature must be >= 0");
  return m * mode_entropy(1.0 + temperature / 2.0);
}

double max_single_mode_entropy(int n, double budget) {
  if (n < 2) throw std::invalid_argument("max_single_mode_entropy: n must be >= 2");
  if (budget < 2.0 * n)
    throw std::invalid_argument("max_single_mode_entropy: infeasible budget");
  double nu_max = (budget - 2.0 * n + 4.0) / 4.0;
  return mode_entropy(nu_max);
}

double sigma_gap(const EntropyStats& stats, int n, double budget) {
  if (stats.m != 1) throw std::invalid_argument("sigma_gap: m = 1 statistics required");
  double sd = stats.entropy.stddev();
  if (!(sd > 1e-12))
    throw std::domain_error("sigma_gap: degenerate entropy distribution");
  return (max_single_mode_entropy(n, budget) - stats.entropy.mean()) / sd;
}

CmEntryStats cm_entry_statistics(int n, double budget, std::int64_t samples,
                                 std::uint64_t seed, int workers,
                                 EnsembleVariant variant) {
  if (samples < 2) throw std::invalid_argument("cm_entry_statistics: samples must be >= 2");
  int d = 2 * n;
  struct Acc {
    Eigen::MatrixXd sum, sumsq;
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
      CovarianceMatrix sigma = sample_pure_cm(n, budget, rng, variant);
      acc.sum += sigma.entries();
      acc.sumsq += sigma.entries().cwiseProduct(sigma.entries());
    }
  });
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(d, d);
  Eigen::MatrixXd sumsq = Eigen::MatrixXd::Zero(d, d);
  for (const auto& p : parts) {
    sum += p.sum;
    sumsq += p.sumsq;
  }

  CmEntryStats out;
  out.samples = samples;
  out.n = n;
  out.budget = budget;
  out.target = 1.0 + temperature_of(n, budget) / 2.0;
  double ns = static_cast<double>(samples);
  out.mean = sum / ns;
  out.second_moment = sumsq / ns;
  out.variance =
      (out.second_moment - out.mean.cwiseProduct(out.mean)) * (ns / (ns - 1.0));
  out.variance = out.variance.cwiseMax(0.0);
  for (int j = 0; j < d; ++j) {
    for (int k = j; k < d; ++k) {
      double se = std::sqrt(out.variance(j, k) / ns);
      if (se <= 0.0) continue;
      double target = j == k ? out.target : 0.0;
      double dev = std::abs(out.mean(j, k) - target) / se;
      out.max_dev_se = std::max(out.max_dev_se, dev);
      if (j == k)
        out.max_diag_dev_se = std::max(out.max_diag_dev_se, dev);
      else
        out.max_offdiag_dev_se = std::max(out.max_offdiag_dev_se, dev);
    }
  }
  return out;
}

SingleModeMoments single_mode_moments(int n, double budget, std::int64_t samples,
                                      std::uint64_t seed, int workers,
                                      EnsembleVariant variant) {
  if (samples < 1) throw std::invalid_argument("single_mode_moments: samples must be >= 1");
  struct Acc {
    SampleStats xx, xp, pp;
  };
  std::vector<Acc> parts(chunk_count(samples));
  for_each_chunk(samples, workers, [&](std::size_t ci, std::int64_t b, std::int64_t e) {
    Acc& acc = parts[ci];
    Eigen::VectorXd re(n), im(n);
    for (std::int64_t i = b; i < e; ++i) {
      RngStream rng(seed, static_cast<std::uint64_t>(i));
      EnergyVector ev = sample_energy_vector(n, budget, rng, variant);
      Eigen::VectorXd zsq = squeezings_from_energies(ev).array().square();
      sample_sphere_column(n, rng, re, im);
      Eigen::Matrix2d g = reduced_block_from_column(zsq, re, im);
      acc.xx.add(g(0, 0));
      acc.xp.add(g(0, 1));
      acc.pp.add(g(1, 1));
    }
  });
  SingleModeMoments out;
  for (const auto& p : parts) {
    out.xx.merge(p.xx);
    out.xp.merge(p.xp);
    out.pp.merge(p.pp);
  }
  return out;
}

}  // namespace gmc
