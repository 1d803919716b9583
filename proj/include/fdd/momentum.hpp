#pragma once

#include <vector>

#include "fdd/common.hpp"
#include "fdd/numerics.hpp"
#include "fdd/spectra.hpp"
#include "fdd/states.hpp"

namespace fdd::momentum {

// Tabulated momentum density built from Hankel transforms of the radial
// function. psi_tilde_magnitude is the transform magnitude divided by
// sqrt(2 pi), so gamma[i] = psi_tilde_magnitude[i]^2 and
// 2 pi integral gamma p dp = 1 up to norm_residual.
struct MomentumTable {
  spectra::QuantumNumbers qn;
  spectra::SystemParams params;
  std::vector<double> p;                    // increasing, starts at 0
  std::vector<double> psi_tilde_magnitude;
  std::vector<double> gamma;
  double norm_residual = 0.0;               // |2 pi integral gamma p dp - 1|
};

// Magnitude of the raw Hankel transform |integral_0^inf R(r) J_l(p r) r dr|.
// The angular phase is a pure modulus-1 factor and is dropped.
double fdd_momentum_wavefunction(const spectra::QuantumNumbers& qn,
                                 const spectra::SystemParams& sp, double p,
                                 const numerics::Tolerance& tol = {});

// Hybrid grid on [0, p_max]: a geometric head resolving the p^l onset and a
// linear body across the oscillatory hump. p_max <= 0 selects the default
// 6 sqrt(omega_t c) coverage target.
std::vector<double> default_momentum_grid(const spectra::QuantumNumbers& qn,
                                          const spectra::SystemParams& sp,
                                          int points = 2048, double p_max = 0.0);

// Tabulates the momentum density over a worker pool. With the default p_max
// the grid is extended until the tail falls below 1e-14 of the peak; an
// explicit p_max that fails that coverage check raises an error naming the
// p_max that would have sufficed.
MomentumTable fdd_momentum_density_table(const spectra::QuantumNumbers& qn,
                                         const spectra::SystemParams& sp,
                                         int points = 2048, double p_max = 0.0,
                                         const numerics::Tolerance& tol = {});

// 2 pi integral gamma p^3 dp over the tabulated range
double table_second_moment(const MomentumTable& table);

// interpolated view of the table as a density profile
states::DensityProfile to_density_profile(const MomentumTable& table);

}  // namespace fdd::momentum
