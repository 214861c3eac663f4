#include "gmc/microcanonical.hpp"

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gmc/haar.hpp"
#include "gmc/parallel.hpp"

namespace gmc {

EnergyVector::EnergyVector(Eigen::VectorXd values, double budget)
    : values_(std::move(values)), budget_(budget) {
  int n = static_cast<int>(values_.size());
  if (n < 1) throw std::invalid_argument("EnergyVector: empty");
  if (budget_ < 2.0 * n)
    throw std::invalid_argument(
        fmt::format("EnergyVector: budget {:.6g} below 2n = {}", budget_, 2 * n));
  for (int j = 0; j < n; ++j)
    if (values_(j) < 2.0)
      throw std::invalid_argument(
          fmt::format("EnergyVector: E_{} = {:.6g} below vacuum energy 2", j, values_(j)));
  double total = values_.sum();
  if (total > budget_ * (1.0 + 1e-12) + 1e-12)
    throw std::invalid_argument(
        fmt::format("EnergyVector: total {:.12g} exceeds budget {:.12g}", total, budget_));
}

EnergyVector sample_energy_vector(int n, double budget, RngStream& rng,
                                  EnsembleVariant variant) {
  if (n < 1) throw std::invalid_argument("sample_energy_vector: n must be >= 1");
  if (budget < 2.0 * n)
    throw std::invalid_argument(fmt::format(
        "sample_energy_vector: budget {:.6g} infeasible for {} modes", budget, n));
  Eigen::VectorXd e(n);
  if (budget == 2.0 * n) {
    e.setConstant(2.0);
    return EnergyVector(std::move(e), budget);
  }
  int draws = variant == EnsembleVariant::SolidSimplex ? n + 1 : n;
  double total = 0.0;
  Eigen::VectorXd g(draws);
  for (int j = 0; j < draws; ++j) {
    g(j) = rng.exponential();
    total += g(j);
  }
  double surplus = budget - 2.0 * n;
  for (int j = 0; j < n; ++j) e(j) = 2.0 + surplus * (g(j) / total);
  return EnergyVector(std::move(e), budget);
}

double marginal_density(double e_j, int n, double budget) {
  if (n < 1) throw std::invalid_argument("marginal_density: n must be >= 1");
  if (budget < 2.0 * n) throw std::invalid_argument("marginal_density: infeasible budget");
  double surplus = budget - 2.0 * n;
  if (e_j < 2.0 || e_j > 2.0 + surplus) return 0.0;
  if (surplus == 0.0) return 0.0;
  double u = (e_j - 2.0) / surplus;
  return n / surplus * std::pow(1.0 - u, n - 1);
}

double marginal_cdf(double e_j, int n, double budget) {
  if (n < 1) throw std::invalid_argument("marginal_cdf: n must be >= 1");
  if (budget < 2.0 * n) throw std::invalid_argument("marginal_cdf: infeasible budget");
  double surplus = budget - 2.0 * n;
  if (e_j <= 2.0) return 0.0;
  if (e_j >= 2.0 + surplus || surplus == 0.0) return 1.0;
  double u = (e_j - 2.0) / surplus;
  return 1.0 - std::pow(1.0 - u, n);
}

double temperature_of(int n, double budget) {
  if (n < 1) throw std::invalid_argument("temperature_of: n must be >= 1");
  return (budget - 2.0 * n) / n;
}

double boltzmann_limit_density(double e_j, double temperature) {
  if (temperature <= 0.0)
    throw std::domain_error("boltzmann_limit_density: temperature must be positive");
  if (e_j < 2.0) return 0.0;
  return std::exp(-(e_j - 2.0) / temperature) / temperature;
}

Eigen::VectorXd squeezings_from_energies(const EnergyVector& energies) {
  int n = energies.modes();
  Eigen::VectorXd z(n);
  for (int j = 0; j < n; ++j) {
    double e = energies.values()(j);
    if (e < 2.0) throw std::domain_error("squeezings_from_energies: E_j below 2");
    z(j) = std::sqrt((e + std::sqrt(std::max(e * e - 4.0, 0.0))) / 2.0);
  }
  return z;
}

CovarianceMatrix pure_cm(const EnergyVector& energies, const CompactSymplectic& o) {
  int n = energies.modes();
  if (o.modes() != n) throw std::invalid_argument("pure_cm: mode count mismatch");
  Eigen::VectorXd zsq = squeezings_from_energies(energies).array().square();
  Eigen::VectorXd diag(2 * n);
  diag.head(n) = zsq;
  diag.tail(n) = zsq.cwiseInverse();
  Eigen::MatrixXd sigma = o.matrix().transpose() * diag.asDiagonal() * o.matrix();
  sigma = 0.5 * (sigma + sigma.transpose()).eval();
  return CovarianceMatrix(std::move(sigma));
}

CovarianceMatrix sample_pure_cm(int n, double budget, RngStream& rng,
                                EnsembleVariant variant) {
  EnergyVector e = sample_energy_vector(n, budget, rng, variant);
  CompactSymplectic o = sample_compact_symplectic(n, rng);
  return pure_cm(e, o);
}

SampleStats microcanonical_average(
    const std::function<double(const CovarianceMatrix&)>& quantity, int n,
    double budget, std::int64_t samples, std::uint64_t seed, int workers,
    EnsembleVariant variant) {
  if (samples < 1) throw std::invalid_argument("microcanonical_average: samples must be >= 1");
  std::vector<SampleStats> parts(chunk_count(samples));
  for_each_chunk(samples, workers, [&](std::size_t ci, std::int64_t b, std::int64_t e) {
    SampleStats acc;
    for (std::int64_t i = b; i < e; ++i) {
      RngStream rng(seed, static_cast<std::uint64_t>(i));
      acc.add(quantity(sample_pure_cm(n, budget, rng, variant)));
    }
    parts[ci] = acc;
  });
  SampleStats out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

}  // namespace gmc
