#pragma once

#include "fdd/common.hpp"
#include "fdd/momentum.hpp"
#include "fdd/numerics.hpp"
#include "fdd/spectra.hpp"
#include "fdd/states.hpp"

namespace fdd::entropy {

enum class Method { closed_form, quadrature };

struct EntropyReport {
  spectra::QuantumNumbers qn;
  spectra::SystemParams params;
  Space space = Space::position;
  double alpha = 2.0;            // entropy order; 1 means Shannon
  double entropic_moment = 0.0;  // W_alpha, NaN for Shannon
  double renyi = 0.0;
  double tsallis = 0.0;
  double shannon = 0.0;          // NaN unless alpha == 1
  Method method = Method::closed_form;
};

// log W_alpha of the deformed position density, closed contraction over the
// confluent Lauricella function; integer alpha >= 2. lambda = 0 collapses to
// the flat-case closed form.
double log_entropic_moment_fdd_closed(const spectra::QuantumNumbers& qn,
                                      const spectra::SystemParams& sp, int alpha);
double entropic_moment_fdd_closed(const spectra::QuantumNumbers& qn,
                                  const spectra::SystemParams& sp, int alpha);

// log W_beta of the flat-case momentum density, closed form, integer beta >= 2
double log_entropic_moment_fd_momentum_closed(const spectra::QuantumNumbers& qn,
                                              const spectra::SystemParams& sp, int beta);

// W_alpha by adaptive quadrature of the analytic densities; any alpha > 0
// integrable against the tail. Position works for both systems; the momentum
// overload with a table covers the deformed system.
double entropic_moment_position_quadrature(const spectra::QuantumNumbers& qn,
                                           const spectra::SystemParams& sp, double alpha,
                                           const numerics::Tolerance& tol = {});
double entropic_moment_fd_momentum_quadrature(const spectra::QuantumNumbers& qn,
                                              const spectra::SystemParams& sp, double alpha,
                                              const numerics::Tolerance& tol = {});
double entropic_moment_table(const momentum::MomentumTable& table, double alpha);

// R_alpha = log W / (1 - alpha), T_alpha = (W - 1) / (1 - alpha)
double renyi_from_log_moment(double log_w, double alpha);
double tsallis_from_moment(double w, double alpha);

// Shannon entropy of the deformed position density through the assembled
// closed expression. The direct quadrature -2 pi int rho log rho r dr is
// always computed alongside; when the two disagree beyond 1e-7 the quadrature
// value is authoritative and the report says so.
struct ShannonBreakdown {
  double value = 0.0;       // authoritative result
  double assembled = 0.0;   // closed-expression path
  double direct = 0.0;      // quadrature path
  bool quadrature_authoritative = false;
  std::string diagnostic;   // empty when the two paths agree
};
ShannonBreakdown shannon_fdd_position(const spectra::QuantumNumbers& qn,
                                      const spectra::SystemParams& sp,
                                      const numerics::Tolerance& tol = {});

// -2 pi int rho log rho x dx with 0 log 0 = 0, adaptive on the analytic density
double shannon_position_quadrature(const spectra::QuantumNumbers& qn,
                                   const spectra::SystemParams& sp,
                                   const numerics::Tolerance& tol = {});
double shannon_fd_momentum_quadrature(const spectra::QuantumNumbers& qn,
                                      const spectra::SystemParams& sp,
                                      const numerics::Tolerance& tol = {});
double shannon_table(const momentum::MomentumTable& table);

// flat-case closed Shannon entropies (position and momentum differ only by
// omega_t -> 1/omega_t in the scale term)
double shannon_fd_closed(const spectra::QuantumNumbers& qn, const spectra::SystemParams& sp,
                         Space space, const numerics::Tolerance& tol = {});

// Renyi uncertainty functional at conjugate orders 1/alpha + 1/beta = 2,
// 1/2 < alpha < 1:
//   xi_R = R_alpha[rho] + R_beta[gamma]
//          - 2 log(pi alpha^{1/(2 alpha - 2)} beta^{1/(2 beta - 2)})
// Nonnegative, zero exactly on the flat-case ground state. A prebuilt
// momentum table may be passed to amortize sweeps; it must match qn and sp.
struct UncertaintyReport {
  double alpha = 0.0, beta = 0.0;
  double moment_position = 0.0, moment_momentum = 0.0;
  double renyi_position = 0.0, renyi_momentum = 0.0;
  double bound = 0.0;  // saturation value of the sum
  double xi = 0.0;
};
UncertaintyReport renyi_uncertainty(const spectra::QuantumNumbers& qn,
                                    const spectra::SystemParams& sp, double alpha,
                                    const numerics::Tolerance& tol = {},
                                    const momentum::MomentumTable* table = nullptr);

// Tsallis analogue:
//   xi_T = (alpha/pi)^{1/(2 alpha)} W_alpha[rho]^{1/(2 alpha)}
//        - (beta/pi)^{1/(2 beta)} W_beta[gamma]^{1/(2 beta)}
double tsallis_uncertainty(const spectra::QuantumNumbers& qn,
                           const spectra::SystemParams& sp, double alpha,
                           const numerics::Tolerance& tol = {},
                           const momentum::MomentumTable* table = nullptr);

}  // namespace fdd::entropy
