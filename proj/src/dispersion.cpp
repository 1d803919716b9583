#include "fdd/dispersion.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fdd/specfun.hpp"
#include "fdd/states.hpp"

namespace fdd::dispersion {

namespace {

void check_even_moment(int k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("r_moment: only even orders k >= 2 are available");
}

// sum_j C(h, n-j)^2 C(l + h + j, j), the hypergeometric core of <r^{2h}>
double moment_sum(int n, int l, int h) {
  double s = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double b = specfun::generalized_binomial(h, n - j);
    if (b == 0.0) continue;
    s += b * b * specfun::generalized_binomial(l + h + j, j);
  }
  return s;
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// sum_j P_j Gamma(s + j + 1); zero coefficients are skipped so a vanishing
// constant term never multiplies Gamma(0)
double gamma_moment(const std::vector<double>& poly, double s) {
  double out = 0.0;
  for (size_t j = 0; j < poly.size(); ++j) {
    if (poly[j] == 0.0) continue;
    out += poly[j] * std::tgamma(s + j + 1.0);
  }
  return out;
}

// coefficients of B(u) = l L - u L - 2 u Ltilde, degree n + 1
std::vector<double> b_coefficients(int n, int l) {
  const std::vector<double> a = specfun::laguerre_coefficients(n, l);
  std::vector<double> at;
  if (n > 0) at = specfun::laguerre_coefficients(n - 1, l + 1);
  std::vector<double> b(n + 2, 0.0);
  for (int j = 0; j <= n; ++j) b[j] += (double)l * a[j];
  for (int j = 0; j <= n; ++j) b[j + 1] -= a[j];
  for (int j = 0; j + 1 <= n; ++j) b[j + 1] -= 2.0 * at[j];
  return b;
}

double radial_p2_quadrature(const spectra::QuantumNumbers& qn, const spectra::SystemParams& sp,
                            const numerics::Tolerance& tol) {
  const auto d = spectra::derive(qn, sp);
  const int n = qn.n, l = qn.l();
  const double N = states::fdd_normalization(qn, d.Omega, sp.lambda);
  auto integrand = [&, N](double r) {
    const double u = d.Omega * r * r;
    const double mu = 1.0 + sp.lambda * r * r;
    const double lag = specfun::generalized_laguerre(n, l, u);
    const double lag_t = n > 0 ? specfun::generalized_laguerre(n - 1, l + 1, u) : 0.0;
    const double B = l * lag - u * lag - 2.0 * u * lag_t;
    const double dR = N * std::exp(-0.5 * u) *
                      (sp.lambda * std::pow(r, l + 1) * lag / std::sqrt(mu) +
                       std::sqrt(mu) * std::pow(r, l - 1) * B);
    return dR * dR * r;
  };
  return numerics::adaptive_semi_infinite(integrand, tol).value;
}

double radial_p2_closed(const spectra::QuantumNumbers& qn, const spectra::SystemParams& sp) {
  const auto d = spectra::derive(qn, sp);
  const int n = qn.n, l = qn.l();
  if (sp.lambda == 0.0) return sp.omega_t() * (2.0 * n + 1.0);

  const std::vector<double> lag = specfun::laguerre_coefficients(n, l);
  const std::vector<double> lag_sq = convolve(lag, lag);
  const std::vector<double> b = b_coefficients(n, l);
  const std::vector<double> b_sq = convolve(b, b);

  const double O = d.Omega;
  const double z = O / sp.lambda;
  const double m_phi = 0.5 * std::pow(O, -(l + 1.0)) * gamma_moment(lag_sq, l);
  const double t1 = 0.5 * std::pow(O, -(double)l) * gamma_moment(b_sq, l - 1.0);
  const double t2 = 0.5 * sp.lambda * std::pow(O, -(l + 1.0)) * gamma_moment(b_sq, l);
  double a2 = 0.0;
  for (size_t s = 0; s < lag_sq.size(); ++s) {
    if (lag_sq[s] == 0.0) continue;
    const int t = (int)s + l;
    a2 += lag_sq[s] * std::tgamma(t + 1.0) * specfun::expint_scaled(t + 1, z);
  }
  a2 *= 0.5 / (sp.lambda * std::pow(O, (double)l));

  const double n2 = std::pow(states::fdd_normalization(qn, O, sp.lambda), 2);
  return n2 * (t1 + t2 - sp.lambda * m_phi - sp.lambda * a2);
}

}  // namespace

double r_moment_fd(const spectra::QuantumNumbers& qn, const spectra::SystemParams& sp, int k) {
  check_even_moment(k);
  if (sp.lambda != 0.0) throw std::domain_error("r_moment_fd: needs lambda = 0");
  qn.validate();
  sp.validate();
  const int n = qn.n, l = qn.l(), h = k / 2;
  return std::exp(specfun::log_gamma(n + 1.0) - specfun::log_gamma(n + l + 1.0) -
                  h * std::log(sp.omega_t())) *
         std::tgamma(l + h + 1.0) * moment_sum(n, l, h);
}

double r_moment_fdd(const spectra::QuantumNumbers& qn, const spectra::SystemParams& sp, int k) {
  check_even_moment(k);
  const auto d = spectra::derive(qn, sp);
  const int n = qn.n, l = qn.l(), h = k / 2;
  const double c = qn.c();
  const double O = d.Omega;
  const double pref =
      std::exp(specfun::log_gamma(n + 1.0) + specfun::log_gamma(l + h + 1.0) -
               specfun::log_gamma(n + l + 1.0)) /
      (std::pow(O, h) + c * sp.lambda * std::pow(O, h - 1.0));
  const double s1 = moment_sum(n, l, h);
  const double s2 = moment_sum(n, l, h + 1);
  return pref * (s1 + (sp.lambda / O) * (l + h + 1.0) * s2);
}

double p2_fd(const spectra::QuantumNumbers& qn, const spectra::SystemParams& sp) {
  if (sp.lambda != 0.0) throw std::domain_error("p2_fd: needs lambda = 0");
  qn.validate();
  sp.validate();
  return sp.omega_t() * qn.c();
}

P2Result p2_fdd(const spectra::QuantumNumbers& qn, const spectra::SystemParams& sp,
                const numerics::Tolerance& tol) {
  const auto d = spectra::derive(qn, sp);
  const int l = qn.l();
  const double c = qn.c();

  P2Result out;
  out.angular = l == 0 ? 0.0
                       : l * d.Omega * (l * sp.lambda + d.Omega) / (c * sp.lambda + d.Omega);
  if (sp.lambda == 0.0) {
    out.radial = sp.omega_t() * (2.0 * qn.n + 1.0);
    out.radial_closed = out.radial;
    out.closed_agrees = true;
    out.total = out.radial + out.angular;
    return out;
  }
  out.radial = radial_p2_quadrature(qn, sp, tol);
  out.radial_closed = radial_p2_closed(qn, sp);
  const double scale = std::max(1.0, std::fabs(out.radial));
  out.closed_agrees = std::fabs(out.radial_closed - out.radial) <= 1e-4 * scale;
  if (!out.closed_agrees)
    out.diagnostic = "closed radial evaluation departs from quadrature by " +
                     std::to_string(out.radial_closed - out.radial);
  out.total = out.radial + out.angular;
  return out;
}

DispersionReport uncertainty_product(const spectra::QuantumNumbers& qn,
                                     const spectra::SystemParams& sp,
                                     const numerics::Tolerance& tol) {
  DispersionReport rep;
  rep.qn = qn;
  rep.params = sp;
  const double c = qn.c();
  if (sp.lambda == 0.0) {
    qn.validate();
    sp.validate();
    rep.r2 = c / sp.omega_t();
    rep.p2 = sp.omega_t() * c;
  } else {
    rep.r2 = r_moment_fdd(qn, sp, 2);
    rep.p2 = p2_fdd(qn, sp, tol).total;
  }
  rep.product = rep.r2 * rep.p2;
  rep.fd_reference = c * c;
  return rep;
}

double omega_cut(int n, int l, double omega, double lambda) {
  if (n < 0 || l < 0) throw std::invalid_argument("omega_cut: n, l >= 0");
  if (!(omega > 0.0)) throw std::invalid_argument("omega_cut: omega > 0");
  if (lambda < 0.0) throw std::invalid_argument("omega_cut: lambda >= 0");
  if (lambda == 0.0) return 0.0;

  const double c = 2.0 * n + l + 1.0;
  const double g = std::sqrt(c * c * lambda * lambda +
                             2.0 * lambda * omega *
                                 (l * (l + 8.0 * n + 4.0) + 8.0 * n * (n + 1.0) + 3.0) / c +
                             omega * omega) -
                   c * lambda + omega;
  double x = std::sqrt(lambda * lambda * l * l + c * lambda * g + 0.25 * g * g -
                       omega * omega) -
             lambda * l;

  const spectra::QuantumNumbers qn{n, l};
  const double target = c / omega;
  auto mismatch = [&](double oc) {
    return r_moment_fdd(qn, {omega, oc, lambda}, 2) - target;
  };
  for (int it = 0; it < 3; ++it) {
    const double f = mismatch(x);
    if (std::fabs(f) <= 1e-13 * target) break;
    const double h = 1e-6 * std::max(1.0, x);
    const double df = (mismatch(x + h) - mismatch(x - h)) / (2.0 * h);
    if (df == 0.0) break;
    x -= f / df;
  }
  return x;
}

double omega_cut_p2_difference(int n, int l, double omega, double lambda,
                               const numerics::Tolerance& tol) {
  const double oc = omega_cut(n, l, omega, lambda);
  const spectra::QuantumNumbers qn{n, l};
  const double c = 2.0 * n + l + 1.0;
  return p2_fdd(qn, {omega, oc, lambda}, tol).total - omega * c;
}

double inverted_field_residual(int n, int l, double omega, double omega_c, double lambda) {
  const spectra::QuantumNumbers qn{n, l};
  const auto left = spectra::derive(qn, {omega, -omega_c, lambda});
  const auto right = spectra::derive(qn, {omega, omega_c - 2.0 * lambda * l, lambda});
  return std::fabs(left.Omega - right.Omega);
}

}  // namespace fdd::dispersion
