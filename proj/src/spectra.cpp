#include "fdd/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace fdd::spectra {

namespace {

long long igcd(long long a, long long b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a == 0 ? 1 : a;
}

}  // namespace

double fd_energy(const QuantumNumbers& qn, const SystemParams& sp) {
  qn.validate();
  sp.validate();
  return sp.omega_t() * qn.c() - qn.m * sp.omega_c;
}

double fdd_energy(const QuantumNumbers& qn, const SystemParams& sp) {
  qn.validate();
  sp.validate();
  const double c = qn.c();
  const double wt = sp.omega_t();
  const double a = sp.lambda * c * c + qn.m * sp.omega_c;
  const double rad = a * a + wt * wt * c * c - (double)qn.m * qn.m * sp.omega_c * sp.omega_c;
  return -qn.m * sp.omega_c - sp.lambda * c * c + std::sqrt(rad);
}

double effective_frequency(const QuantumNumbers& qn, const SystemParams& sp) {
  const double wt = sp.omega_t();
  const double arg = wt * wt - 2.0 * sp.lambda * fdd_energy(qn, sp);
  if (!(arg > 0.0))
    throw std::domain_error("effective_frequency: omega_t^2 - 2 lambda E must stay positive");
  return std::sqrt(arg);
}

DerivedFrequencies derive(const QuantumNumbers& qn, const SystemParams& sp) {
  DerivedFrequencies d;
  d.omega_t = sp.omega_t();
  d.energy = fdd_energy(qn, sp);
  d.Omega = effective_frequency(qn, sp);
  d.nu = sp.omega_c / d.omega_t;
  d.sigma = sp.lambda / d.omega_t;
  d.nu_lambda = sp.omega_c / d.Omega;
  return d;
}

double fd_dimensionless_energy(const QuantumNumbers& qn, double nu) {
  qn.validate();
  return qn.c() - nu * qn.m;
}

double fdd_dimensionless_energy(const QuantumNumbers& qn, double sigma, double nu) {
  qn.validate();
  if (!(sigma >= 0.0)) throw std::domain_error("fdd_dimensionless_energy: sigma >= 0");
  const double c = qn.c();
  const double a = sigma * c * c + nu * qn.m;
  const double rad = a * a + c * c - nu * nu * (double)qn.m * qn.m;
  return std::sqrt(rad) - sigma * c * c - nu * qn.m;
}

FdDegeneracy degeneracy_nu_fd(const QuantumNumbers& a, const QuantumNumbers& b) {
  a.validate();
  b.validate();
  FdDegeneracy out;
  if (a.n == b.n && a.m == b.m) {
    out.status = DegeneracyStatus::undefined;
    out.diagnostic = "identical states";
    return out;
  }
  if (a.m == b.m) {
    out.status = DegeneracyStatus::undefined;
    out.diagnostic = "equal angular momenta: levels never cross in nu";
    return out;
  }
  // c is an odd integer, so the crossing ratio is exactly rational
  long long dc = (long long)std::llround(a.c() - b.c());
  long long dm = a.m - b.m;
  long long g = igcd(dc, dm);
  long long num = dc / g, den = dm / g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0 || num > den) {
    out.status = DegeneracyStatus::none;
    out.diagnostic = "crossing ratio " + std::to_string(num) + "/" + std::to_string(den) +
                     " falls outside [0, 1]";
    return out;
  }
  out.status = DegeneracyStatus::found;
  out.nu = {num, den};
  return out;
}

FddDegeneracy degeneracy_nu_fdd(const QuantumNumbers& a, const QuantumNumbers& b,
                                double sigma) {
  a.validate();
  b.validate();
  if (!(sigma >= 0.0)) throw std::domain_error("degeneracy_nu_fdd: sigma >= 0");
  FddDegeneracy out;
  if (a.n == b.n && a.m == b.m) {
    out.status = DegeneracyStatus::undefined;
    out.diagnostic = "identical states";
    return out;
  }
  if (a.m == b.m) {
    out.status = DegeneracyStatus::undefined;
    out.diagnostic = "equal angular momenta: levels never cross in nu";
    return out;
  }
  const double c1 = a.c(), c2 = b.c();
  const double m1 = a.m, m2 = b.m;
  const double dm = m1 - m2;
  const double cross = c1 * m2 - c2 * m1;
  const double disc = std::sqrt(sigma * sigma * cross * cross + dm * dm);
  const double base = sigma * (c1 - c2) * cross;

  // Both roots of the squared degeneracy condition. Squaring introduces one
  // spurious root; only a residual check against the actual levels tells the
  // genuine crossing apart.
  const double scale = std::max(1.0, std::max(c1, c2));
  double best_residual = std::numeric_limits<double>::infinity();
  for (double s : {1.0, -1.0}) {
    double nu = (base + s * std::fabs(c1 - c2) * disc) / (dm * dm);
    if (!std::isfinite(nu)) continue;
    if (nu < -1e-9 || nu > 1.0 + 1e-9) continue;
    nu = std::clamp(nu, 0.0, 1.0);
    const double residual =
        std::fabs(fdd_dimensionless_energy(a, sigma, nu) - fdd_dimensionless_energy(b, sigma, nu));
    if (residual <= 1e-12 * scale && residual < best_residual) {
      best_residual = residual;
      out.status = DegeneracyStatus::found;
      out.nu = nu;
      out.residual = residual;
    }
  }
  if (out.status != DegeneracyStatus::found) {
    out.status = DegeneracyStatus::none;
    out.diagnostic = "no admissible crossing in nu within [0, 1]";
  }
  return out;
}

double degeneracy_curve_epsilon(double sigma, long long q1, long long q2, double nu) {
  if (!(sigma > 0.0)) throw std::domain_error("degeneracy_curve_epsilon: sigma > 0");
  if (q1 == 0 || q2 == 0) throw std::invalid_argument("degeneracy_curve_epsilon: q1, q2 != 0");
  const double q = (double)q1 / (double)q2;
  return (1.0 - nu * nu / (q * q)) / (2.0 * sigma);
}

double landau_darboux_min_gap(double sigma, int nmax, int mmax) {
  if (!(sigma > 0.0)) throw std::domain_error("landau_darboux_min_gap: sigma > 0");
  if (nmax < 0 || mmax < 0) throw std::invalid_argument("landau_darboux_min_gap: bounds >= 0");
  std::vector<double> eps;
  for (int n = 0; n <= nmax; ++n)
    for (int m = -mmax; m <= mmax; ++m)
      eps.push_back(fdd_dimensionless_energy({n, m}, sigma, 1.0));
  std::sort(eps.begin(), eps.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < eps.size(); ++i) gap = std::min(gap, eps[i + 1] - eps[i]);
  return gap;
}

}  // namespace fdd::spectra
