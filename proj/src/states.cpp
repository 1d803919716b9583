#include "fdd/states.hpp"

#include <cmath>

#include "fdd/specfun.hpp"

namespace fdd::states {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

double log_norm_fdd(const spectra::QuantumNumbers& qn, double Omega, double lambda) {
  const int l = qn.l();
  return 0.5 * ((l + 1) * std::log(Omega) + std::log(2.0) + specfun::log_gamma(qn.n + 1.0) -
                specfun::log_gamma(qn.n + l + 1.0) - std::log1p(qn.c() * lambda / Omega));
}

std::vector<double> geometric_grid_with_zero(double lo, double hi, int points) {
  std::vector<double> x(points);
  x[0] = 0.0;
  const double ratio = std::pow(hi / lo, 1.0 / (points - 2));
  double v = lo;
  for (int i = 1; i < points; ++i) {
    x[i] = v;
    v *= ratio;
  }
  x[points - 1] = hi;
  return x;
}

}  // namespace

double fd_normalization(const spectra::QuantumNumbers& qn, double omega_t) {
  qn.validate();
  if (!(omega_t > 0.0)) throw std::domain_error("fd_normalization: omega_t > 0");
  const int l = qn.l();
  return std::exp(0.5 * (std::log(2.0) + specfun::log_gamma(qn.n + 1.0) +
                         (l + 1) * std::log(omega_t) - specfun::log_gamma(qn.n + l + 1.0)));
}

double fdd_normalization(const spectra::QuantumNumbers& qn, double Omega, double lambda) {
  qn.validate();
  if (!(Omega > 0.0)) throw std::domain_error("fdd_normalization: Omega > 0");
  if (!(lambda >= 0.0)) throw std::domain_error("fdd_normalization: lambda >= 0");
  return std::exp(log_norm_fdd(qn, Omega, lambda));
}

double fdd_radial_wavefunction(const spectra::QuantumNumbers& qn,
                               const spectra::SystemParams& sp, double r) {
  if (!(r >= 0.0)) throw std::domain_error("fdd_radial_wavefunction: r >= 0");
  const auto d = spectra::derive(qn, sp);
  const int l = qn.l();
  if (r == 0.0) {
    if (l > 0) return 0.0;
    return std::exp(log_norm_fdd(qn, d.Omega, sp.lambda)) *
           specfun::generalized_laguerre(qn.n, 0.0, 0.0);
  }
  const double u = d.Omega * r * r;
  const double lag = specfun::generalized_laguerre(qn.n, l, u);
  if (lag == 0.0) return 0.0;
  double lr = log_norm_fdd(qn, d.Omega, sp.lambda) + 0.5 * std::log1p(sp.lambda * r * r) +
              l * std::log(r) - 0.5 * u + std::log(std::fabs(lag));
  return std::copysign(std::exp(lr), lag);
}

double fdd_position_density(const spectra::QuantumNumbers& qn,
                            const spectra::SystemParams& sp, double r) {
  if (!(r >= 0.0)) throw std::domain_error("fdd_position_density: r >= 0");
  const auto d = spectra::derive(qn, sp);
  const int l = qn.l();
  if (r == 0.0) {
    if (l > 0) return 0.0;
    const double lag0 = specfun::generalized_laguerre(qn.n, 0.0, 0.0);
    return std::exp(2.0 * log_norm_fdd(qn, d.Omega, sp.lambda)) * lag0 * lag0 / kTwoPi;
  }
  const double u = d.Omega * r * r;
  const double lag = specfun::generalized_laguerre(qn.n, l, u);
  if (lag == 0.0) return 0.0;
  double lr = 2.0 * log_norm_fdd(qn, d.Omega, sp.lambda) + std::log1p(sp.lambda * r * r) +
              2.0 * l * std::log(r) - u + 2.0 * std::log(std::fabs(lag)) - std::log(kTwoPi);
  return std::exp(lr);
}

double fd_momentum_density(const spectra::QuantumNumbers& qn,
                           const spectra::SystemParams& sp, double p) {
  qn.validate();
  sp.validate();
  if (sp.lambda != 0.0)
    throw std::domain_error("fd_momentum_density: closed momentum density needs lambda = 0");
  if (!(p >= 0.0)) throw std::domain_error("fd_momentum_density: p >= 0");
  const double wt = sp.omega_t();
  const int l = qn.l();
  const double logc = specfun::log_gamma(qn.n + 1.0) - specfun::log_gamma(qn.n + l + 1.0) -
                      (l + 1) * std::log(wt) - std::log(kPi);
  if (p == 0.0) {
    if (l > 0) return 0.0;
    const double lag0 = specfun::generalized_laguerre(qn.n, 0.0, 0.0);
    return std::exp(logc) * lag0 * lag0;
  }
  const double u = p * p / wt;
  const double lag = specfun::generalized_laguerre(qn.n, l, u);
  if (lag == 0.0) return 0.0;
  return std::exp(logc + 2.0 * l * std::log(p) - u + 2.0 * std::log(std::fabs(lag)));
}

DensityProfile fdd_position_profile(const spectra::QuantumNumbers& qn,
                                    const spectra::SystemParams& sp, int points) {
  if (points < 16) throw std::invalid_argument("fdd_position_profile: points >= 16");
  const auto d = spectra::derive(qn, sp);
  const double s = 1.0 / std::sqrt(d.Omega);
  const double r_max = 4.0 * std::sqrt(2.0 * qn.n + qn.l() + 10.0) * s;
  DensityProfile prof;
  prof.space = Space::position;
  prof.system = sp.lambda == 0.0 ? System::fd : System::fdd;
  prof.qn = qn;
  prof.params = sp;
  prof.abscissae = geometric_grid_with_zero(1e-4 * s, r_max, points);
  prof.values.resize(points);
  for (int i = 0; i < points; ++i)
    prof.values[i] = fdd_position_density(qn, sp, prof.abscissae[i]);
  return prof;
}

DensityProfile fd_momentum_profile(const spectra::QuantumNumbers& qn,
                                   const spectra::SystemParams& sp, int points) {
  if (points < 16) throw std::invalid_argument("fd_momentum_profile: points >= 16");
  qn.validate();
  sp.validate();
  const double s = std::sqrt(sp.omega_t());
  const double p_max = 4.0 * std::sqrt(2.0 * qn.n + qn.l() + 10.0) * s;
  DensityProfile prof;
  prof.space = Space::momentum;
  prof.system = System::fd;
  prof.qn = qn;
  prof.params = sp;
  prof.abscissae = geometric_grid_with_zero(1e-4 * s, p_max, points);
  prof.values.resize(points);
  for (int i = 0; i < points; ++i)
    prof.values[i] = fd_momentum_density(qn, sp, prof.abscissae[i]);
  return prof;
}

double position_norm_residual(const spectra::QuantumNumbers& qn,
                              const spectra::SystemParams& sp,
                              const numerics::Tolerance& tol) {
  auto res = numerics::adaptive_semi_infinite(
      [&](double r) { return kTwoPi * r * fdd_position_density(qn, sp, r); }, tol);
  return std::fabs(res.value - 1.0);
}

double fd_momentum_norm_residual(const spectra::QuantumNumbers& qn,
                                 const spectra::SystemParams& sp,
                                 const numerics::Tolerance& tol) {
  auto res = numerics::adaptive_semi_infinite(
      [&](double p) { return kTwoPi * p * fd_momentum_density(qn, sp, p); }, tol);
  return std::fabs(res.value - 1.0);
}

int radial_node_count(const spectra::QuantumNumbers& qn, const spectra::SystemParams& sp) {
  const auto d = spectra::derive(qn, sp);
  const double s = 1.0 / std::sqrt(d.Omega);
  const double r_max = 4.0 * std::sqrt(2.0 * qn.n + qn.l() + 10.0) * s;
  const double step = 1e-3 * s;
  int count = 0;
  double prev = 0.0;
  for (double r = step; r < r_max; r += step) {
    const double v = fdd_radial_wavefunction(qn, sp, r);
    if (prev != 0.0 && v != 0.0 && std::signbit(v) != std::signbit(prev)) ++count;
    if (v != 0.0) prev = v;
  }
  return count;
}

}  // namespace fdd::states
