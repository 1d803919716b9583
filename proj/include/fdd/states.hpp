#pragma once

#include <vector>

#include "fdd/common.hpp"
#include "fdd/numerics.hpp"
#include "fdd/spectra.hpp"

namespace fdd::states {

// Radial samples of a normalized single-particle density, 2 pi x integrable.
// The abscissa grid is geometric with a leading zero so interpolation covers
// the full support.
struct DensityProfile {
  Space space = Space::position;
  System system = System::fdd;
  spectra::QuantumNumbers qn;
  spectra::SystemParams params;
  std::vector<double> abscissae;
  std::vector<double> values;
};

// flat-case radial normalization sqrt(2 n! omega_t^{l+1} / Gamma(n+l+1))
double fd_normalization(const spectra::QuantumNumbers& qn, double omega_t);

// deformed normalization
// Omega^{(l+1)/2} sqrt(2 n! / Gamma(n+l+1)) / sqrt(1 + c lambda / Omega)
double fdd_normalization(const spectra::QuantumNumbers& qn, double Omega, double lambda);

// R(r) = N sqrt(1 + lambda r^2) r^l e^{-Omega r^2 / 2} L_n^l(Omega r^2);
// lambda = 0 reduces to the flat-case radial function. Assembled in log space
// so extreme quantum numbers neither overflow nor underflow.
double fdd_radial_wavefunction(const spectra::QuantumNumbers& qn,
                               const spectra::SystemParams& sp, double r);

// rho(r) = (N^2 / 2 pi) (1 + lambda r^2) r^{2l} e^{-Omega r^2} L_n^l(Omega r^2)^2
double fdd_position_density(const spectra::QuantumNumbers& qn,
                            const spectra::SystemParams& sp, double r);

// flat-case momentum density
// gamma(p) = n! / (omega_t^{l+1} pi Gamma(n+l+1)) p^{2l} e^{-p^2/omega_t}
//            L_n^l(p^2/omega_t)^2
double fd_momentum_density(const spectra::QuantumNumbers& qn,
                           const spectra::SystemParams& sp, double p);

// Sampled position density on [0, 4 sqrt(2n + l + 10) / sqrt(Omega)] with a
// geometric interior grid starting at 1e-4 / sqrt(Omega).
DensityProfile fdd_position_profile(const spectra::QuantumNumbers& qn,
                                    const spectra::SystemParams& sp, int points = 1024);

// Sampled flat-case momentum density on the analogous momentum grid.
DensityProfile fd_momentum_profile(const spectra::QuantumNumbers& qn,
                                   const spectra::SystemParams& sp, int points = 1024);

// |2 pi integral rho x dx - 1| evaluated adaptively on the analytic density
double position_norm_residual(const spectra::QuantumNumbers& qn,
                              const spectra::SystemParams& sp,
                              const numerics::Tolerance& tol = {});
double fd_momentum_norm_residual(const spectra::QuantumNumbers& qn,
                                 const spectra::SystemParams& sp,
                                 const numerics::Tolerance& tol = {});

// sign changes of the radial function across (0, r_max), step 1e-3/sqrt(Omega)
int radial_node_count(const spectra::QuantumNumbers& qn, const spectra::SystemParams& sp);

}  // namespace fdd::states
