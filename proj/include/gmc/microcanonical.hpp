#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

#include "gmc/rng.hpp"
#include "gmc/stats.hpp"
#include "gmc/symplectic.hpp"

namespace gmc {

class CompactSymplectic;

/// Primary measure: local energies flat on the solid region
/// {E_j >= 2, sum E_j <= E}. FixedTotal pins sum E_j = E instead, for
/// comparison runs (the two agree at the thermodynamic limit).
enum class EnsembleVariant { SolidSimplex, FixedTotal };

/// Local mode energies E_j >= 2 with sum <= budget; budget >= 2n.
class EnergyVector {
 public:
  EnergyVector(Eigen::VectorXd values, double budget);

  int modes() const { return static_cast<int>(values_.size()); }
  const Eigen::VectorXd& values() const { return values_; }
  double budget() const { return budget_; }
  double total() const { return values_.sum(); }

 private:
  Eigen::VectorXd values_;
  double budget_;
};

/// E_j = 2 + (E - 2n) x_j with x uniform on the solid simplex (n+1 i.i.d.
/// exponentials, normalized by their total). E = 2n returns the vacuum
/// energies deterministically.
EnergyVector sample_energy_vector(int n, double budget, RngStream& rng,
                                  EnsembleVariant variant = EnsembleVariant::SolidSimplex);

/// Closed-form marginal of one local energy:
/// P_n(E_j, E) = n/(E-2n) (1 - (E_j-2)/(E-2n))^{n-1}; 0 outside the support
/// [2, E - 2(n-1)].
double marginal_density(double e_j, int n, double budget);

/// Integral of the marginal from 2 to e_j.
double marginal_cdf(double e_j, int n, double budget);

/// T = (E - 2n)/n.
double temperature_of(int n, double budget);

/// exp(-(E_j-2)/T)/T for E_j >= 2; the n -> infinity limit of the marginal.
double boltzmann_limit_density(double e_j, double temperature);

/// z_j = sqrt((E_j + sqrt(E_j^2 - 4))/2), the z >= 1 root of z^2 + z^-2 = E_j.
Eigen::VectorXd squeezings_from_energies(const EnergyVector& energies);

/// sigma = O^T diag(z_1^2..z_n^2, z_1^-2..z_n^-2) O.
CovarianceMatrix pure_cm(const EnergyVector& energies, const CompactSymplectic& o);

/// One microcanonical draw: independent EnergyVector and Haar O.
CovarianceMatrix sample_pure_cm(int n, double budget, RngStream& rng,
                                EnsembleVariant variant = EnsembleVariant::SolidSimplex);

/// Streaming statistics of `quantity` over i.i.d. microcanonical draws.
/// Deterministic for fixed (seed, samples), independent of worker count.
SampleStats microcanonical_average(
    const std::function<double(const CovarianceMatrix&)>& quantity, int n,
    double budget, std::int64_t samples, std::uint64_t seed, int workers = 0,
    EnsembleVariant variant = EnsembleVariant::SolidSimplex);

}  // namespace gmc
