#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "gmc/microcanonical.hpp"
#include "gmc/stats.hpp"

namespace gmc {

struct EntropyStats {
  int m = 0;
  int n = 0;
  double budget = 0.0;
  SampleStats entropy;   // von Neumann entropy of the reduction, bits
  Histogram histogram;   // 200 bins over [0, histogram.hi()]
  double smax = 0.0;     // max_single_mode_entropy-based bound used for binning
};

struct EntropySamplingOptions {
  EnsembleVariant variant = EnsembleVariant::SolidSimplex;
  /// Reduce a uniformly random mode instead of mode 0 (cross-check of the
  /// measure's exchange symmetry). Forces the full-matrix path.
  bool random_mode = false;
  /// Force construction of the full 2n x 2n covariance matrix even for m=1.
  bool full_matrix = false;
  int histogram_bins = 200;
  std::uint64_t seed = 1;
  int workers = 0;
};

/// Monte Carlo entropy of the first m modes of microcanonical n-mode pure
/// states. For m = 1 the reduced 2x2 block is sampled directly through the
/// Haar column (uniform on the complex sphere), which is O(n) per draw and
/// distribution-identical to building the full matrix.
EntropyStats entropy_samples(int m, int n, double budget, std::int64_t samples,
                             const EntropySamplingOptions& options = {});

/// m * mode_entropy(1 + T/2).
double thermal_entropy_prediction(int m, double temperature);

/// f(nu_max) with nu_max = (E - 2n + 4)/4: the largest single-mode symplectic
/// eigenvalue of a globally pure n-mode state with energy <= E (two-mode
/// squeezed pair holding all surplus energy, the rest vacuum).
double max_single_mode_entropy(int n, double budget);

/// (max_single_mode_entropy - mean) / std for m = 1 statistics.
double sigma_gap(const EntropyStats& stats, int n, double budget);

/// Empirical first/second moments of every CM entry over microcanonical
/// draws, against the canonical targets (1 + T/2) delta_jk.
struct CmEntryStats {
  std::int64_t samples = 0;
  int n = 0;
  double budget = 0.0;
  double target = 0.0;  // 1 + T/2
  Eigen::MatrixXd mean;
  Eigen::MatrixXd variance;       // unbiased
  Eigen::MatrixXd second_moment;  // mean of sigma_jk^2
  /// max over entries (j <= k) of |mean - target delta_jk| / std_error.
  double max_dev_se = 0.0;
  double max_diag_dev_se = 0.0;
  double max_offdiag_dev_se = 0.0;
};

CmEntryStats cm_entry_statistics(int n, double budget, std::int64_t samples,
                                 std::uint64_t seed, int workers = 0,
                                 EnsembleVariant variant = EnsembleVariant::SolidSimplex);

/// Fast per-draw moments of the first mode's reduced block
/// (sigma_xx, sigma_xp, sigma_pp) without building the full matrix.
struct SingleModeMoments {
  SampleStats xx;
  SampleStats xp;
  SampleStats pp;
};

SingleModeMoments single_mode_moments(int n, double budget, std::int64_t samples,
                                      std::uint64_t seed, int workers = 0,
                                      EnsembleVariant variant = EnsembleVariant::SolidSimplex);

}  // namespace gmc
