#include "fdd/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fdd/specfun.hpp"

namespace fdd::entropy {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

double log_binomial(double a, int k) {
  return specfun::log_gamma(a + 1.0) - specfun::log_gamma(k + 1.0) -
         specfun::log_gamma(a - k + 1.0);
}

// adaptive integration over [0, inf) split at the supplied interior edges
double segmented_semi_infinite(const std::function<double(double)>& f,
                               const std::vector<double>& edges,
                               const numerics::Tolerance& tol) {
  double total = 0.0;
  double lo = 0.0;
  for (double e : edges) {
    if (e <= lo) continue;
    total += numerics::support::adaptive_finite(f, lo, e, tol).value;
    lo = e;
  }
  const double base = lo;
  total += numerics::adaptive_semi_infinite([&f, base](double t) { return f(base + t); }, tol)
               .value;
  return total;
}

// z^s e^{-z} L_n^l(z)^2 in log space; zero at the polynomial roots
double weighted_square(int n, int l, double s, double z) {
  if (z <= 0.0) return 0.0;
  const double lag = specfun::generalized_laguerre(n, l, z);
  if (lag == 0.0) return 0.0;
  return std::exp(s * std::log(z) - z + 2.0 * std::log(std::fabs(lag)));
}

struct JIntegrals {
  double j1 = 0.0, j1t = 0.0;  // log z^l term against z^l and z^{l+1} weights
  double j2 = 0.0, j2t = 0.0;  // 2 log |L| term
  double j3 = 0.0, j3t = 0.0;  // log(1 + a z) term
};

JIntegrals compute_j_integrals(int n, int l, double a, const numerics::Tolerance& tol) {
  JIntegrals out;
  std::vector<double> roots;
  if (n > 0) roots = numerics::gauss_laguerre_rule(n, l).nodes;

  auto integrate = [&](const std::function<double(double)>& f) {
    return segmented_semi_infinite(f, roots, tol);
  };

  if (l > 0) {
    out.j1 = integrate([=](double z) { return weighted_square(n, l, l, z) * l * std::log(z); });
    out.j1t =
        integrate([=](double z) { return weighted_square(n, l, l + 1, z) * l * std::log(z); });
  }
  if (n > 0) {
    auto log_abs_l = [=](double z) {
      const double lag = specfun::generalized_laguerre(n, l, z);
      return lag == 0.0 ? 0.0 : std::log(std::fabs(lag));
    };
    out.j2 =
        integrate([=](double z) { return 2.0 * weighted_square(n, l, l, z) * log_abs_l(z); });
    out.j2t = integrate(
        [=](double z) { return 2.0 * weighted_square(n, l, l + 1, z) * log_abs_l(z); });
  }
  if (a > 0.0) {
    out.j3 =
        integrate([=](double z) { return weighted_square(n, l, l, z) * std::log1p(a * z); });
    out.j3t =
        integrate([=](double z) { return weighted_square(n, l, l + 1, z) * std::log1p(a * z); });
  }
  return out;
}

void check_table_matches(const momentum::MomentumTable& table,
                         const spectra::QuantumNumbers& qn, const spectra::SystemParams& sp) {
  if (table.qn.n != qn.n || table.qn.m != qn.m || table.params.omega != sp.omega ||
      table.params.omega_c != sp.omega_c || table.params.lambda != sp.lambda)
    throw std::invalid_argument("entropy: supplied momentum table belongs to another state");
}

}  // namespace

double log_entropic_moment_fdd_closed(const spectra::QuantumNumbers& qn,
                                      const spectra::SystemParams& sp, int alpha) {
  if (alpha < 2) throw std::invalid_argument("log_entropic_moment_fdd_closed: alpha >= 2");
  const auto d = spectra::derive(qn, sp);
  const int n = qn.n, l = qn.l();
  const double c = qn.c();
  const double la = (double)l * alpha;

  const double log_c_nl =
      specfun::log_gamma(n + l + 1.0) - specfun::log_gamma(n + 1.0) - specfun::log_gamma(l + 1.0);
  double log_pref = (1.0 - alpha) * (std::log(kPi) - std::log(d.Omega)) +
                    alpha * (specfun::log_gamma(n + 1.0) - specfun::log_gamma(n + l + 1.0) -
                             std::log1p(c * sp.lambda / d.Omega)) +
                    2.0 * alpha * log_c_nl;

  // eta = sum_k C(alpha,k) (lambda/(Omega alpha))^k Gamma(l alpha + k + 1)
  //       alpha^{-(l alpha + 1)} F_A(l alpha + k + 1; ...)
  const double q = sp.lambda / (d.Omega * alpha);
  std::vector<double> log_terms;
  bool positive = true;
  std::vector<double> raw_terms;
  for (int k = 0; k <= alpha; ++k) {
    if (k > 0 && q == 0.0) break;
    specfun::SymmetricLauricellaSpec fs;
    fs.a = la + k + 1.0;
    fs.n = n;
    fs.c = l + 1.0;
    fs.x = 1.0 / alpha;
    fs.copies = 2 * alpha;
    const double f = specfun::lauricella_fa_symmetric(fs);
    if (f <= 0.0) positive = false;
    const double log_shape = specfun::log_gamma(la + k + 1.0) - (la + 1.0) * std::log((double)alpha);
    if (positive)
      log_terms.push_back(log_binomial(alpha, k) + (k > 0 ? k * std::log(q) : 0.0) + log_shape +
                          std::log(f));
    raw_terms.push_back(std::exp(log_binomial(alpha, k) + (k > 0 ? k * std::log(q) : 0.0) +
                                 log_shape) *
                        f);
  }

  double log_eta;
  if (positive) {
    const double m = *std::max_element(log_terms.begin(), log_terms.end());
    double s = 0.0;
    for (double t : log_terms) s += std::exp(t - m);
    log_eta = m + std::log(s);
  } else {
    double s = 0.0;
    for (double t : raw_terms) s += t;
    if (!(s > 0.0))
      throw std::runtime_error("log_entropic_moment_fdd_closed: nonpositive moment sum");
    log_eta = std::log(s);
  }
  return log_pref + log_eta;
}

double entropic_moment_fdd_closed(const spectra::QuantumNumbers& qn,
                                  const spectra::SystemParams& sp, int alpha) {
  return std::exp(log_entropic_moment_fdd_closed(qn, sp, alpha));
}

double log_entropic_moment_fd_momentum_closed(const spectra::QuantumNumbers& qn,
                                              const spectra::SystemParams& sp, int beta) {
  if (beta < 2) throw std::invalid_argument("log_entropic_moment_fd_momentum_closed: beta >= 2");
  if (sp.lambda != 0.0)
    throw std::domain_error("log_entropic_moment_fd_momentum_closed: needs lambda = 0");
  qn.validate();
  sp.validate();
  const int n = qn.n, l = qn.l();
  const double lb = (double)l * beta;
  const double wt = sp.omega_t();
  const double log_c_nl =
      specfun::log_gamma(n + l + 1.0) - specfun::log_gamma(n + 1.0) - specfun::log_gamma(l + 1.0);
  specfun::SymmetricLauricellaSpec fs;
  fs.a = lb + 1.0;
  fs.n = n;
  fs.c = l + 1.0;
  fs.x = 1.0 / beta;
  fs.copies = 2 * beta;
  const double f = specfun::lauricella_fa_symmetric(fs);
  if (!(f > 0.0))
    throw std::runtime_error("log_entropic_moment_fd_momentum_closed: nonpositive contraction");
  return (1.0 - beta) * (std::log(kPi) + std::log(wt)) +
         beta * (specfun::log_gamma(n + 1.0) - specfun::log_gamma(n + l + 1.0)) +
         2.0 * beta * log_c_nl + specfun::log_gamma(lb + 1.0) -
         (lb + 1.0) * std::log((double)beta) + std::log(f);
}

double entropic_moment_position_quadrature(const spectra::QuantumNumbers& qn,
                                           const spectra::SystemParams& sp, double alpha,
                                           const numerics::Tolerance& tol) {
  if (!(alpha > 0.0))
    throw std::domain_error("entropic_moment_position_quadrature: alpha > 0");
  const auto d = spectra::derive(qn, sp);
  std::vector<double> root_radii;
  if (qn.n > 0)
    for (double z : numerics::gauss_laguerre_rule(qn.n, qn.l()).nodes)
      root_radii.push_back(std::sqrt(z / d.Omega));
  auto f = [&](double r) {
    const double rho = states::fdd_position_density(qn, sp, r);
    return rho > 0.0 ? kTwoPi * r * std::pow(rho, alpha) : 0.0;
  };
  return segmented_semi_infinite(f, root_radii, tol);
}

double entropic_moment_fd_momentum_quadrature(const spectra::QuantumNumbers& qn,
                                              const spectra::SystemParams& sp, double alpha,
                                              const numerics::Tolerance& tol) {
  if (!(alpha > 0.0))
    throw std::domain_error("entropic_moment_fd_momentum_quadrature: alpha > 0");
  const double wt = sp.omega_t();
  std::vector<double> root_p;
  if (qn.n > 0)
    for (double z : numerics::gauss_laguerre_rule(qn.n, qn.l()).nodes)
      root_p.push_back(std::sqrt(z * wt));
  auto f = [&](double p) {
    const double g = states::fd_momentum_density(qn, sp, p);
    return g > 0.0 ? kTwoPi * p * std::pow(g, alpha) : 0.0;
  };
  return segmented_semi_infinite(f, root_p, tol);
}

double entropic_moment_table(const momentum::MomentumTable& table, double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("entropic_moment_table: alpha > 0");
  numerics::support::PchipInterpolant interp(table.p, table.gamma);
  return interp.integrate_transformed([alpha](double x, double s) {
    return s > 0.0 ? kTwoPi * x * std::pow(s, alpha) : 0.0;
  });
}

double renyi_from_log_moment(double log_w, double alpha) {
  if (alpha == 1.0) throw std::domain_error("renyi_from_log_moment: alpha != 1");
  return log_w / (1.0 - alpha);
}

double tsallis_from_moment(double w, double alpha) {
  if (alpha == 1.0) throw std::domain_error("tsallis_from_moment: alpha != 1");
  return (w - 1.0) / (1.0 - alpha);
}

ShannonBreakdown shannon_fdd_position(const spectra::QuantumNumbers& qn,
                                      const spectra::SystemParams& sp,
                                      const numerics::Tolerance& tol) {
  const auto d = spectra::derive(qn, sp);
  const int n = qn.n, l = qn.l();
  const double c = qn.c();
  const double a = sp.lambda / d.Omega;
  const double D = 1.0 / (1.0 + c * sp.lambda / d.Omega);
  const double nf_over_g = std::exp(specfun::log_gamma(n + 1.0) - specfun::log_gamma(n + l + 1.0));

  const JIntegrals J = compute_j_integrals(n, l, a, tol);
  const double j_sum = J.j1 + a * J.j1t + J.j2 + a * J.j2t + J.j3 + a * J.j3t;
  const double poly = (2.0 * n + l + 1.0) +
                      a * (6.0 * n * n + 6.0 * (double)l * n + 6.0 * n + l + (double)l * l +
                           2.0 * l + 2.0);

  ShannonBreakdown out;
  out.assembled = -std::log(d.Omega) -
                  (std::log(2.0) + specfun::log_gamma(n + 1.0) - specfun::log_gamma(n + l + 1.0)) +
                  std::log1p(c * sp.lambda / d.Omega) - nf_over_g * D * j_sum + D * poly +
                  std::log(kTwoPi);
  out.direct = shannon_position_quadrature(qn, sp, tol);
  const double gap = std::fabs(out.assembled - out.direct);
  if (gap > 1e-7) {
    out.quadrature_authoritative = true;
    out.value = out.direct;
    out.diagnostic = "closed and quadrature paths disagree by " + std::to_string(gap) +
                     "; quadrature value reported";
  } else {
    out.value = out.assembled;
  }
  return out;
}

double shannon_position_quadrature(const spectra::QuantumNumbers& qn,
                                   const spectra::SystemParams& sp,
                                   const numerics::Tolerance& tol) {
  const auto d = spectra::derive(qn, sp);
  std::vector<double> root_radii;
  if (qn.n > 0)
    for (double z : numerics::gauss_laguerre_rule(qn.n, qn.l()).nodes)
      root_radii.push_back(std::sqrt(z / d.Omega));
  auto f = [&](double r) {
    const double rho = states::fdd_position_density(qn, sp, r);
    return rho > 0.0 ? -kTwoPi * r * rho * std::log(rho) : 0.0;
  };
  return segmented_semi_infinite(f, root_radii, tol);
}

double shannon_fd_momentum_quadrature(const spectra::QuantumNumbers& qn,
                                      const spectra::SystemParams& sp,
                                      const numerics::Tolerance& tol) {
  const double wt = sp.omega_t();
  std::vector<double> root_p;
  if (qn.n > 0)
    for (double z : numerics::gauss_laguerre_rule(qn.n, qn.l()).nodes)
      root_p.push_back(std::sqrt(z * wt));
  auto f = [&](double p) {
    const double g = states::fd_momentum_density(qn, sp, p);
    return g > 0.0 ? -kTwoPi * p * g * std::log(g) : 0.0;
  };
  return segmented_semi_infinite(f, root_p, tol);
}

double shannon_table(const momentum::MomentumTable& table) {
  numerics::support::PchipInterpolant interp(table.p, table.gamma);
  return interp.integrate_transformed([](double x, double s) {
    return s > 0.0 ? -kTwoPi * x * s * std::log(s) : 0.0;
  });
}

double shannon_fd_closed(const spectra::QuantumNumbers& qn, const spectra::SystemParams& sp,
                         Space space, const numerics::Tolerance& tol) {
  if (sp.lambda != 0.0) throw std::domain_error("shannon_fd_closed: needs lambda = 0");
  qn.validate();
  sp.validate();
  const int n = qn.n, l = qn.l();
  const double wt = sp.omega_t();
  const JIntegrals J = compute_j_integrals(n, l, 0.0, tol);
  const double nf_over_g = std::exp(specfun::log_gamma(n + 1.0) - specfun::log_gamma(n + l + 1.0));
  const double scale = space == Space::position ? -std::log(wt) : std::log(wt);
  return scale - (std::log(2.0) + specfun::log_gamma(n + 1.0) - specfun::log_gamma(n + l + 1.0)) -
         nf_over_g * (J.j1 + J.j2) + (2.0 * n + l + 1.0) + std::log(kTwoPi);
}

UncertaintyReport renyi_uncertainty(const spectra::QuantumNumbers& qn,
                                    const spectra::SystemParams& sp, double alpha,
                                    const numerics::Tolerance& tol,
                                    const momentum::MomentumTable* table) {
  if (!(alpha > 0.5 && alpha < 1.0))
    throw std::domain_error("renyi_uncertainty: alpha in (1/2, 1)");
  const double beta = alpha / (2.0 * alpha - 1.0);

  UncertaintyReport rep;
  rep.alpha = alpha;
  rep.beta = beta;
  rep.moment_position = entropic_moment_position_quadrature(qn, sp, alpha, tol);
  if (sp.lambda == 0.0) {
    rep.moment_momentum = entropic_moment_fd_momentum_quadrature(qn, sp, beta, tol);
  } else if (table != nullptr) {
    check_table_matches(*table, qn, sp);
    rep.moment_momentum = entropic_moment_table(*table, beta);
  } else {
    momentum::MomentumTable local = momentum::fdd_momentum_density_table(qn, sp, 1024, 0.0, tol);
    rep.moment_momentum = entropic_moment_table(local, beta);
  }
  rep.renyi_position = renyi_from_log_moment(std::log(rep.moment_position), alpha);
  rep.renyi_momentum = renyi_from_log_moment(std::log(rep.moment_momentum), beta);
  rep.bound = 2.0 * (std::log(kPi) + std::log(alpha) / (2.0 * alpha - 2.0) +
                     std::log(beta) / (2.0 * beta - 2.0));
  rep.xi = rep.renyi_position + rep.renyi_momentum - rep.bound;
  return rep;
}

double tsallis_uncertainty(const spectra::QuantumNumbers& qn, const spectra::SystemParams& sp,
                           double alpha, const numerics::Tolerance& tol,
                           const momentum::MomentumTable* table) {
  UncertaintyReport rep = renyi_uncertainty(qn, sp, alpha, tol, table);
  const double a = rep.alpha, b = rep.beta;
  const double lhs = std::pow(a / kPi, 1.0 / (2.0 * a)) * std::pow(rep.moment_position, 1.0 / (2.0 * a));
  const double rhs = std::pow(b / kPi, 1.0 / (2.0 * b)) * std::pow(rep.moment_momentum, 1.0 / (2.0 * b));
  return lhs - rhs;
}

}  // namespace fdd::entropy
