#pragma once

#include <cstdint>

#include "gmc/stats.hpp"
#include "gmc/symplectic.hpp"

namespace gmc {

/// Overlap of a pure single-mode input of energy E1 with its image under the
/// standard unit-gain CV teleportation channel with resource squeezing r:
/// (1 + e^{-4r} + e^{-2r} E1)^{-1/2}.
double per_state_fidelity(double e1, double r);

/// Channel action on second moments: sigma + 2 e^{-2r} I.
CovarianceMatrix output_cm(const CovarianceMatrix& sigma_in, double r);

/// Average fidelity over inputs with energy uniform on [2, E]. Evaluated as
/// 2 / (1 + e^{-2r} + sqrt(1 + e^{-4r} + E e^{-2r})), which equals
/// 2 e^{2r} (sqrt(1 + e^{-4r} + E e^{-2r}) - 1 - e^{-2r}) / (E - 2) exactly
/// but stays finite and cancellation-free at E -> 2.
double average_fidelity(double budget, double r);

/// Monte Carlo mean of per_state_fidelity over the n = 1 microcanonical
/// measure (E1 uniform on [2, E]; the phase is drawn and discarded, as the
/// fidelity is rotation invariant).
SampleStats mc_average_fidelity(double budget, double r, std::int64_t samples,
                                std::uint64_t seed, int workers = 0);

}  // namespace gmc
