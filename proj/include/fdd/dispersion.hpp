#pragma once

#include "fdd/common.hpp"
#include "fdd/momentum.hpp"
#include "fdd/numerics.hpp"
#include "fdd/spectra.hpp"

namespace fdd::dispersion {

// <r^k> for even k >= 2 (closed form, exact up to rounding)
double r_moment_fd(const spectra::QuantumNumbers& qn, const spectra::SystemParams& sp, int k);
double r_moment_fdd(const spectra::QuantumNumbers& qn, const spectra::SystemParams& sp, int k);

// <p^2>; the confined system splits into an exact angular part and a radial
// part integrated numerically, with a closed-form cross-check
double p2_fd(const spectra::QuantumNumbers& qn, const spectra::SystemParams& sp);

struct P2Result {
  double total = 0.0;
  double angular = 0.0;          // exact
  double radial = 0.0;           // quadrature, authoritative
  double radial_closed = 0.0;    // best-effort closed evaluation
  bool closed_agrees = false;    // |radial_closed - radial| <= 1e-4 * scale
  std::string diagnostic;
};

P2Result p2_fdd(const spectra::QuantumNumbers& qn, const spectra::SystemParams& sp,
                const numerics::Tolerance& tol = {});

// Heisenberg-style product <r^2><p^2> with per-factor values
struct DispersionReport {
  spectra::QuantumNumbers qn;
  spectra::SystemParams params;
  double r2 = 0.0;
  double p2 = 0.0;
  double product = 0.0;
  double fd_reference = 0.0;  // (l + 2n + 1)^2, the flat-system value
};

DispersionReport uncertainty_product(const spectra::QuantumNumbers& qn,
                                     const spectra::SystemParams& sp,
                                     const numerics::Tolerance& tol = {});

// field strength at which the confined <r^2> matches the flat value c/omega,
// for the m = +l member of the level; closed-form seed plus a short polish
double omega_cut(int n, int l, double omega, double lambda);

// <p^2> gap between the matched confined state and the flat value omega * c
double omega_cut_p2_difference(int n, int l, double omega, double lambda,
                               const numerics::Tolerance& tol = {});

// |Omega(n, +l; omega, -omega_c, lambda) - Omega(n, +l; omega, omega_c - 2 lambda l, lambda)|
double inverted_field_residual(int n, int l, double omega, double omega_c, double lambda);

}  // namespace fdd::dispersion
