#pragma once

#include <cmath>
#include <cstdlib>
#include <string>

#include "fdd/common.hpp"

namespace fdd::spectra {

// Radial quantum number n >= 0 and angular momentum m (signed integer).
struct QuantumNumbers {
  int n = 0;
  int m = 0;
  int l() const { return std::abs(m); }
  double c() const { return 2.0 * n + std::abs(m) + 1.0; }
  void validate() const {
    if (n < 0) throw std::invalid_argument("QuantumNumbers: n >= 0 required");
  }
};

// Confinement frequency, cyclotron frequency and deformation strength.
// omega_c may be negative (reversed field); omega and lambda may not.
// The free case omega = omega_c = 0 is rejected: nothing is confined.
struct SystemParams {
  double omega = 1.0;
  double omega_c = 0.0;
  double lambda = 0.0;
  void validate() const {
    if (!(omega >= 0.0)) throw std::domain_error("SystemParams: omega >= 0 required");
    if (!(lambda >= 0.0)) throw std::domain_error("SystemParams: lambda >= 0 required");
    if (omega == 0.0 && omega_c == 0.0)
      throw std::domain_error("SystemParams: omega and omega_c cannot both vanish");
    if (!std::isfinite(omega) || !std::isfinite(omega_c) || !std::isfinite(lambda))
      throw std::domain_error("SystemParams: parameters must be finite");
  }
  double omega_t() const { return std::sqrt(omega * omega + omega_c * omega_c); }
};

struct DerivedFrequencies {
  double omega_t = 0.0;   // total frequency sqrt(omega^2 + omega_c^2)
  double energy = 0.0;    // level energy
  double Omega = 0.0;     // effective frequency sqrt(omega_t^2 - 2 lambda E)
  double nu = 0.0;        // omega_c / omega_t
  double sigma = 0.0;     // lambda / omega_t
  double nu_lambda = 0.0; // omega_c / Omega
};

// harmonic level energy with field: omega_t c - m omega_c (flat case)
double fd_energy(const QuantumNumbers& qn, const SystemParams& sp);

// deformed level energy:
// -m omega_c - lambda c^2 + sqrt((lambda c^2 + m omega_c)^2 + omega_t^2 c^2 - m^2 omega_c^2)
double fdd_energy(const QuantumNumbers& qn, const SystemParams& sp);

// Omega = sqrt(omega_t^2 - 2 lambda E); reduces to omega_t when lambda = 0
double effective_frequency(const QuantumNumbers& qn, const SystemParams& sp);

DerivedFrequencies derive(const QuantumNumbers& qn, const SystemParams& sp);

// epsilon = c - nu m, the flat spectrum in units of omega_t
double fd_dimensionless_energy(const QuantumNumbers& qn, double nu);

// epsilon = sqrt((sigma c^2 + nu m)^2 + c^2 - nu^2 m^2) - sigma c^2 - nu m
double fdd_dimensionless_energy(const QuantumNumbers& qn, double sigma, double nu);

struct Rational {
  long long num = 0;
  long long den = 1;
  double value() const { return (double)num / (double)den; }
};

enum class DegeneracyStatus {
  found,      // a field ratio nu in [0, 1] makes the pair degenerate
  none,       // no admissible crossing; see diagnostic
  undefined,  // the pair never separates in nu (m1 = m2 or identical states)
};

struct FdDegeneracy {
  DegeneracyStatus status = DegeneracyStatus::none;
  Rational nu;  // reduced fraction, den > 0, meaningful when status == found
  std::string diagnostic;
};

struct FddDegeneracy {
  DegeneracyStatus status = DegeneracyStatus::none;
  double nu = 0.0;       // meaningful when status == found
  double residual = 0.0; // |eps1(nu) - eps2(nu)| at the reported nu
  std::string diagnostic;
};

// Flat-case crossing: nu = (c1 - c2) / (m1 - m2) as an exact reduced rational,
// admissible only inside [0, 1].
FdDegeneracy degeneracy_nu_fd(const QuantumNumbers& a, const QuantumNumbers& b);

// Deformed crossing at deformation sigma >= 0. Both closed-form branches are
// evaluated and validated against the level difference; a root of the squared
// equation that fails validation is rejected as spurious.
FddDegeneracy degeneracy_nu_fdd(const QuantumNumbers& a, const QuantumNumbers& b,
                                double sigma);

// Degeneracy locus in the (nu, epsilon) plane for a flat-case rational
// q = q1/q2: epsilon = (1 - nu^2 / q^2) / (2 sigma), sigma > 0.
double degeneracy_curve_epsilon(double sigma, long long q1, long long q2, double nu);

// Minimum pairwise gap |eps_i - eps_j| at nu = 1 over n <= nmax, |m| <= mmax.
// Strictly positive gaps mean the fully polarized deformed system keeps no
// accidental degeneracy.
double landau_darboux_min_gap(double sigma, int nmax, int mmax);

}  // namespace fdd::spectra
