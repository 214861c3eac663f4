#include "gmc/teleportation.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gmc/parallel.hpp"
#include "gmc/rng.hpp"

namespace gmc {

double per_state_fidelity(double e1, double r) {
  if (e1 < 2.0) throw std::domain_error("per_state_fidelity: E1 must be >= 2");
  if (r < 0.0) throw std::domain_error("per_state_fidelity: r must be >= 0");
  double b = std::exp(-2.0 * r);
  return 1.0 / std::sqrt(1.0 + b * b + b * e1);
}

CovarianceMatrix output_cm(const CovarianceMatrix& sigma_in, double r) {
  if (sigma_in.modes() != 1) throw std::invalid_argument("output_cm: single-mode input only");
  if (r < 0.0) throw std::domain_error("output_cm: r must be >= 0");
  double noise = 2.0 * std::exp(-2.0 * r);
  return CovarianceMatrix(sigma_in.entries() + noise * Eigen::Matrix2d::Identity());
}

double average_fidelity(double budget, double r) {
  if (budget < 2.0) throw std::domain_error("average_fidelity: E must be >= 2");
  if (r < 0.0) throw std::domain_error("average_fidelity: r must be >= 0");
  double b = std::exp(-2.0 * r);
  return 2.0 / (1.0 + b + std::sqrt(1.0 + b * b + budget * b));
}

SampleStats mc_average_fidelity(double budget, double r, std::int64_t samples,
                                std::uint64_t seed, int workers) {
  if (budget < 2.0) throw std::domain_error("mc_average_fidelity: E must be >= 2");
  if (samples < 1) throw std::invalid_argument("mc_average_fidelity: samples must be >= 1");
  std::vector<SampleStats> parts(chunk_count(samples));
  for_each_chunk(samples, workers, [&](std::size_t ci, std::int64_t b0, std::int64_t e0) {
    SampleStats acc;
    for (std::int64_t i = b0; i < e0; ++i) {
      RngStream rng(seed, static_cast<std::uint64_t>(i));
      double e1 = budget > 2.0 ? rng.uniform(2.0, budget) : 2.0;
      (void)rng.uniform(0.0, M_PI);  // phase; fidelity is rotation invariant
      acc.add(per_state_fidelity(e1, r));
    }
    parts[ci] = acc;
  });
  SampleStats out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

}  // namespace gmc
