#include "fdd/validation.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "fdd/dispersion.hpp"
#include "fdd/entropy.hpp"
#include "fdd/geometry.hpp"
#include "fdd/momentum.hpp"
#include "fdd/numerics.hpp"
#include "fdd/specfun.hpp"
#include "fdd/spectra.hpp"
#include "fdd/states.hpp"

namespace fdd::validation {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct Harness {
  std::vector<CheckResult> results;

  void close_to(const std::string& name, const std::function<double()>& measure,
                double expected, double tol) {
    CheckResult r;
    r.name = name;
    try {
      const double got = measure();
      const double err = std::fabs(got - expected);
      r.pass = err <= tol;
      std::ostringstream os;
      os.precision(15);
      os << "got " << got << ", want " << expected << " within " << tol;
      r.detail = os.str();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("threw: ") + e.what();
    }
    results.push_back(std::move(r));
  }

  void holds(const std::string& name, const std::function<bool(std::string&)>& predicate) {
    CheckResult r;
    r.name = name;
    try {
      r.pass = predicate(r.detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("threw: ") + e.what();
    }
    results.push_back(std::move(r));
  }
};

}  // namespace

std::vector<CheckResult> run_all() {
  Harness h;
  const numerics::Tolerance tol{};

  h.close_to("log_gamma half integer", [] { return specfun::log_gamma(0.5); },
             0.5 * std::log(kPi), 1e-15);
  h.close_to("laguerre explicit degree 2",
             [] { return specfun::generalized_laguerre(2, 1, 0.75); },
             3.0 - 3.0 * 0.75 + 0.75 * 0.75 / 2.0, 1e-14);
  h.close_to("laguerre coefficient row",
             [] { return specfun::laguerre_coefficients(3, 2)[1]; }, -10.0, 1e-12);
  h.close_to("binomial with real top",
             [] { return specfun::generalized_binomial(2.5, 2); }, 2.5 * 1.5 / 2.0, 1e-14);

  h.holds("gauss-laguerre two point rule", [](std::string& detail) {
    const auto rule = numerics::gauss_laguerre_rule(2, 0.0);
    const double e0 = std::fabs(rule.nodes[0] - (2.0 - std::sqrt(2.0)));
    const double e1 = std::fabs(rule.nodes[1] - (2.0 + std::sqrt(2.0)));
    detail = "node errors " + std::to_string(e0) + ", " + std::to_string(e1);
    return e0 < 1e-13 && e1 < 1e-13;
  });
  h.close_to("gauss-laguerre monomial moment", [] {
    const auto rule = numerics::gauss_laguerre_rule(8, 0.0);
    double s = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
      s += rule.weights[i] * std::pow(rule.nodes[i], 5);
    return s;
  }, 120.0, 1e-9);
  h.close_to("adaptive exponential norm", [&] {
    return numerics::adaptive_semi_infinite([](double z) { return std::exp(-z); }, tol).value;
  }, 1.0, 1e-12);
  h.close_to("adaptive logarithmic moment", [&] {
    return numerics::adaptive_semi_infinite(
               [](double z) { return z * z * std::exp(-z) * std::log1p(z); }, tol)
        .value;
  }, 2.5963473623231940743, 1e-11);
  h.close_to("first bessel zero", [] { return specfun::bessel_j_zeros(0, 1)[0]; },
             2.4048255576957727686, 1e-9);
  h.close_to("bessel squared sum rule", [] {
    double s = specfun::bessel_j(0, 7.0) * specfun::bessel_j(0, 7.0);
    for (int k = 1; k <= 40; ++k) {
      const double jk = specfun::bessel_j(k, 7.0);
      s += 2.0 * jk * jk;
    }
    return s;
  }, 1.0, 1e-12);
  h.close_to("scaled exponential integral tail",
             [] { return 1e6 * specfun::expint_scaled(1, 1e6); }, 1.0, 1e-3);
  h.holds("scaled exponential integral recurrence", [](std::string& detail) {
    const double z = 2.0;
    const double direct = specfun::expint_scaled(2, z);
    const double stepped = 1.0 - z * specfun::expint_scaled(1, z);
    detail = "direct " + std::to_string(direct) + " vs stepped " + std::to_string(stepped);
    return std::fabs(direct - stepped) < 1e-14;
  });
  h.holds("hypergeometric contraction vs brute force", [](std::string& detail) {
    specfun::SymmetricLauricellaSpec fs;
    fs.a = 3.0;
    fs.n = 2;
    fs.c = 2.0;
    fs.x = 0.5;
    fs.copies = 4;
    const double fast = specfun::lauricella_fa_symmetric(fs);
    const double slow = specfun::lauricella_fa_bruteforce(
        3.0, {-2.0, -2.0, -2.0, -2.0}, {2.0, 2.0, 2.0, 2.0}, {0.5, 0.5, 0.5, 0.5});
    detail = "fast " + std::to_string(fast) + " vs slow " + std::to_string(slow);
    return std::fabs(fast - slow) <= 1e-12 * std::fabs(slow);
  });

  h.close_to("flat energy with field", [] {
    return spectra::fd_energy({1, -2}, {3.0, 4.0, 0.0});
  }, 33.0, 1e-12);
  h.close_to("effective frequency unit point", [] {
    return spectra::derive({0, 0}, {std::sqrt(3.0), 0.0, 1.0}).Omega;
  }, 1.0, 1e-12);
  h.holds("flat-limit energy reduction", [](std::string& detail) {
    const spectra::QuantumNumbers qn{2, 1};
    const double e0 = spectra::fd_energy(qn, {1.0, 1.5, 0.0});
    const double e1 = spectra::fdd_energy(qn, {1.0, 1.5, 1e-12});
    detail = "gap " + std::to_string(std::fabs(e1 - e0));
    return std::fabs(e1 - e0) < 1e-9;
  });
  h.holds("flat crossing ratio", [](std::string& detail) {
    const auto deg = spectra::degeneracy_nu_fd({1, 0}, {0, 4});
    detail = deg.diagnostic;
    if (deg.status != spectra::DegeneracyStatus::found) return false;
    return deg.nu.num == 1 && deg.nu.den == 2;
  });
  h.holds("confined crossing residual", [](std::string& detail) {
    const auto deg = spectra::degeneracy_nu_fdd({1, 0}, {0, 4}, 0.02);
    detail = deg.diagnostic + " residual " + std::to_string(deg.residual);
    return deg.status == spectra::DegeneracyStatus::found && std::fabs(deg.residual) <= 1e-12;
  });

  h.close_to("position norm ground state", [&] {
    return states::position_norm_residual({0, 0}, {1.0, 0.0, 1.0}, tol);
  }, 0.0, 1e-10);
  h.close_to("position norm excited state", [&] {
    return states::position_norm_residual({2, 2}, {1.0, 1.0, 0.5}, tol);
  }, 0.0, 1e-10);
  h.holds("radial node count", [](std::string& detail) {
    const int nodes = states::radial_node_count({2, 1}, {1.0, 0.0, 0.4});
    detail = "counted " + std::to_string(nodes);
    return nodes == 2;
  });

  h.close_to("momentum amplitude spot value", [&] {
    return momentum::fdd_momentum_wavefunction({0, 0}, {1.0, 0.0, 0.1}, 1.0, tol);
  }, 0.85118352026917142521, 1e-9);
  h.holds("momentum table normalization", [&](std::string& detail) {
    const auto table = momentum::fdd_momentum_density_table({0, 0}, {1.0, 0.0, 1.0}, 1024, 0.0, tol);
    detail = "norm residual " + std::to_string(table.norm_residual);
    return table.norm_residual <= 1e-6;
  });

  h.holds("entropic moment closed vs quadrature", [&](std::string& detail) {
    const spectra::QuantumNumbers qn{1, 1};
    const spectra::SystemParams sp{1.0, 1.0, 0.1};
    const double closed = entropy::entropic_moment_fdd_closed(qn, sp, 2);
    const double quad = entropy::entropic_moment_position_quadrature(qn, sp, 2.0, tol);
    detail = "closed " + std::to_string(closed) + " vs quadrature " + std::to_string(quad);
    return std::fabs(closed - quad) <= 1e-8 * std::fabs(quad);
  });
  h.close_to("shannon ground state spot value", [&] {
    return entropy::shannon_fdd_position({0, 0}, {1.0, 0.0, 1.0}, tol).value;
  }, 3.5273854391464743447, 1e-8);
  h.close_to("flat shannon sum saturates", [&] {
    const spectra::QuantumNumbers qn{0, 0};
    const spectra::SystemParams sp{1.0, 2.0, 0.0};
    return entropy::shannon_fd_closed(qn, sp, Space::position, tol) +
           entropy::shannon_fd_closed(qn, sp, Space::momentum, tol);
  }, 2.0 * (1.0 + std::log(kPi)), 1e-8);

  h.close_to("second radial moment ground state", [] {
    const double lambda = 0.7;
    const auto d = spectra::derive({0, 0}, {1.0, 0.0, lambda});
    return dispersion::r_moment_fdd({0, 0}, {1.0, 0.0, lambda}, 2) -
           (d.Omega + 2.0 * lambda) / (d.Omega * (d.Omega + lambda));
  }, 0.0, 1e-13);
  h.close_to("kinetic moment ground state spot value", [&] {
    return dispersion::p2_fdd({0, 0}, {1.0, 0.0, 1.0}, tol).total;
  }, 0.2895375227711366477, 1e-7);
  h.holds("kinetic closed matches quadrature", [&](std::string& detail) {
    const auto p2 = dispersion::p2_fdd({1, 2}, {1.0, 1.0, 0.5}, tol);
    detail = "radial " + std::to_string(p2.radial) + " closed " + std::to_string(p2.radial_closed);
    return p2.closed_agrees;
  });
  h.close_to("flat uncertainty product", [&] {
    const auto rep = dispersion::uncertainty_product({1, 3}, {1.0, 5.0, 0.0}, tol);
    return rep.product - rep.fd_reference;
  }, 0.0, 1e-10);
  h.close_to("matching field root", [] {
    return dispersion::omega_cut(0, 0, 1.0, 0.1);
  }, 0.626794834634686, 1e-9);
  h.close_to("field inversion identity", [] {
    return dispersion::inverted_field_residual(1, 2, 1.0, 2.0, 0.5);
  }, 0.0, 1e-12);

  h.close_to("curvature at origin", [] {
    return geometry::scalar_curvature({0.7}, 0.0);
  }, -4.0 * 0.7, 0.0);
  h.holds("embedding height slope", [](std::string& detail) {
    const geometry::SurfaceParams sp{0.8};
    const double r = 1.3, step = 1e-5;
    const double fd = (geometry::embedding_height(sp, r + step) -
                       geometry::embedding_height(sp, r - step)) /
                      (2.0 * step);
    const double an = geometry::embedding_height_derivative(sp, r);
    detail = "finite difference " + std::to_string(fd) + " vs analytic " + std::to_string(an);
    return std::fabs(fd - an) < 1e-8;
  });
  h.holds("height comparison ordering", [](std::string& detail) {
    const geometry::SurfaceParams sp{0.5};
    const double r = 0.05;
    const double s = geometry::geodesic_radius(sp, r);
    const double gap_h = std::fabs(geometry::embedding_height(sp, r) -
                                   geometry::hyperboloid_height(sp, s));
    const double gap_p = std::fabs(geometry::embedding_height(sp, r) -
                                   geometry::paraboloid_height(sp, s));
    detail = "hyperboloid gap " + std::to_string(gap_h) + ", paraboloid gap " +
             std::to_string(gap_p);
    return gap_h <= gap_p;
  });

  return h.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace fdd::validation
