// Acceptance gate: ten end-to-end checks tying the library against its
// independent oracles (closed forms vs quadrature, limit reductions, exact
// rational arithmetic, bound saturation). Each check prints one line and the
// process exits nonzero if any of them fails or overruns its time budget.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fdd/dispersion.hpp"
#include "fdd/entropy.hpp"
#include "fdd/geometry.hpp"
#include "fdd/momentum.hpp"
#include "fdd/numerics.hpp"
#include "fdd/specfun.hpp"
#include "fdd/spectra.hpp"
#include "fdd/states.hpp"

using namespace fdd;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return buf;
}

// largest deviation seen across a sweep, with a tag naming the worst cell
struct Worst {
  double value = -1.0;
  std::string where;
  void update(double v, std::string tag) {
    if (v > value) {
      value = v;
      where = std::move(tag);
    }
  }
};

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

// ---------------------------------------------------------------------------

bool flat_uncertainty_product(std::string& detail) {
  Worst worst;
  for (double wc : {0.0, 1.0, 5.0})
    for (int n = 0; n <= 3; ++n)
      for (int l = 0; l <= 3; ++l) {
        spectra::QuantumNumbers qn{n, l};
        const auto rep = dispersion::uncertainty_product(qn, {1.0, wc, 0.0});
        const double target = (l + 2.0 * n + 1.0) * (l + 2.0 * n + 1.0);
        worst.update(std::fabs(rep.product - target),
                     fmt("n=%d l=%d wc=%g", n, l, wc));
      }
  detail = fmt("worst |product - (l+2n+1)^2| = %.2e at %s", worst.value, worst.where.c_str());
  return worst.value <= 1e-10;
}

bool flat_entropy_sum(std::string& detail) {
  const double target = 2.0 * (1.0 + std::log(kPi));
  Worst worst;
  for (double omega : {1.0, 2.5})
    for (double wc : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0}) {
      spectra::QuantumNumbers gs{0, 0};
      spectra::SystemParams sp{omega, wc, 0.0};
      const double s_pos = entropy::shannon_position_quadrature(gs, sp);
      const double s_mom = entropy::shannon_fd_momentum_quadrature(gs, sp);
      worst.update(std::fabs(s_pos + s_mom - target), fmt("omega=%g wc=%g", omega, wc));
      // the closed expressions must stand on the same quadrature ground
      worst.update(std::fabs(entropy::shannon_fd_closed(gs, sp, Space::position) - s_pos),
                   fmt("closed pos omega=%g wc=%g", omega, wc));
      worst.update(std::fabs(entropy::shannon_fd_closed(gs, sp, Space::momentum) - s_mom),
                   fmt("closed mom omega=%g wc=%g", omega, wc));
    }
  detail = fmt("worst |S_pos + S_mom - 2(1+log pi)| = %.2e at %s", worst.value,
               worst.where.c_str());
  return worst.value <= 1e-8;
}

bool closed_moments_vs_quadrature(std::string& detail) {
  Worst worst;
  for (int n = 0; n <= 3; ++n)
    for (int l = 0; l <= 2; ++l)
      for (int alpha : {2, 3})
        for (double lambda : {0.0, 0.1, 1.0})
          for (double wc : {0.0, 1.0, 2.0}) {
            spectra::QuantumNumbers qn{n, l};
            spectra::SystemParams sp{1.0, wc, lambda};
            const double closed = entropy::entropic_moment_fdd_closed(qn, sp, alpha);
            const double quad =
                entropy::entropic_moment_position_quadrature(qn, sp, (double)alpha);
            worst.update(std::fabs(closed - quad) / std::fabs(quad),
                         fmt("n=%d l=%d a=%d la=%g wc=%g", n, l, alpha, lambda, wc));
          }
  detail = fmt("worst relative gap = %.2e at %s (216 cells)", worst.value, worst.where.c_str());
  return worst.value <= 1e-8;
}

bool deformation_switch_off(std::string& detail) {
  const double eps = 1e-10;  // residual deformation
  Worst worst;
  auto dev = [](double a, double b) { return std::fabs(a - b) / std::max(1.0, std::fabs(b)); };
  for (int n = 0; n <= 2; ++n)
    for (int l = 0; l <= 2; ++l)
      for (double wc : {0.0, 1.0, 2.0}) {
        spectra::QuantumNumbers qn{n, l};
        spectra::SystemParams on{1.0, wc, eps};
        spectra::SystemParams off{1.0, wc, 0.0};
        const std::string tag = fmt("n=%d l=%d wc=%g", n, l, wc);
        worst.update(dev(spectra::fdd_energy(qn, on), spectra::fd_energy(qn, off)),
                     "energy " + tag);
        worst.update(dev(spectra::effective_frequency(qn, on), off.omega_t()),
                     "Omega " + tag);
        for (double r : {0.3, 1.0, 2.2})
          worst.update(dev(states::fdd_position_density(qn, on, r),
                           states::fdd_position_density(qn, off, r)),
                       fmt("density r=%g ", r) + tag);
        for (double p : {0.7, 2.0})
          worst.update(
              dev(momentum::fdd_momentum_wavefunction(qn, on, p),
                  std::sqrt(2.0 * kPi * states::fd_momentum_density(qn, off, p))),
              fmt("transform p=%g ", p) + tag);
        for (int k : {2, 4})
          worst.update(dev(dispersion::r_moment_fdd(qn, on, k),
                           dispersion::r_moment_fd(qn, off, k)),
                       fmt("r^%d ", k) + tag);
        worst.update(dev(dispersion::p2_fdd(qn, on).total, dispersion::p2_fd(qn, off)),
                     "p^2 " + tag);
        worst.update(dev(entropy::entropic_moment_fdd_closed(qn, on, 2),
                         entropy::entropic_moment_fdd_closed(qn, off, 2)),
                     "W_2 " + tag);
      }
  detail = fmt("worst reduction gap = %.2e at %s", worst.value, worst.where.c_str());
  return worst.value <= 1e-6;
}

bool momentum_tables(std::string& detail) {
  Worst worst_norm, worst_p2;
  for (int n = 0; n <= 2; ++n)
    for (int l = 0; l <= 2; ++l)
      for (double lambda : {0.1, 1.0})
        for (double wc : {0.0, 2.0}) {
          spectra::QuantumNumbers qn{n, l};
          spectra::SystemParams sp{1.0, wc, lambda};
          const std::string tag = fmt("n=%d l=%d la=%g wc=%g", n, l, lambda, wc);
          const auto table = momentum::fdd_momentum_density_table(qn, sp, 2048);
          worst_norm.update(table.norm_residual, tag);
          const double analytic = dispersion::p2_fdd(qn, sp).total;
          worst_p2.update(
              std::fabs(momentum::table_second_moment(table) - analytic) / analytic, tag);
        }
  detail = fmt("worst norm residual = %.2e at %s; worst relative <p^2> gap = %.2e at %s",
               worst_norm.value, worst_norm.where.c_str(), worst_p2.value,
               worst_p2.where.c_str());
  return worst_norm.value <= 1e-6 && worst_p2.value <= 1e-5;
}

bool uncertainty_bound(std::string& detail) {
  const double alpha = 2.0 / 3.0;
  double min_xi = 1e300;
  std::string where;
  for (int n = 0; n <= 2; ++n)
    for (int l = 0; l <= 2; ++l)
      for (double lambda : {0.0, 0.1, 1.0})
        for (double wc : {0.0, 1.0, 2.0}) {
          spectra::QuantumNumbers qn{n, l};
          spectra::SystemParams sp{1.0, wc, lambda};
          const auto rep = entropy::renyi_uncertainty(qn, sp, alpha);
          if (rep.xi < min_xi) {
            min_xi = rep.xi;
            where = fmt("n=%d l=%d la=%g wc=%g", n, l, lambda, wc);
          }
        }
  Worst saturation;
  for (double wc : {0.0, 1.0, 2.0, 5.0}) {
    const auto rep = entropy::renyi_uncertainty({0, 0}, {1.0, wc, 0.0}, alpha);
    saturation.update(std::fabs(rep.xi), fmt("wc=%g", wc));
  }
  detail = fmt("min xi = %.2e at %s (81 cells); worst flat ground-state |xi| = %.2e",
               min_xi, where.c_str(), saturation.value);
  return min_xi >= -1e-6 && saturation.value <= 1e-6;
}

bool degeneracy_machinery(std::string& detail) {
  struct Pair {
    spectra::QuantumNumbers a, b;
    long long num, den;
  };
  const std::vector<Pair> pairs = {
      {{0, 5}, {2, 0}, 1, 5}, {{0, 3}, {1, 0}, 1, 3}, {{1, 0}, {0, 4}, 1, 2},
      {{0, 5}, {1, 0}, 3, 5}, {{0, 1}, {0, 2}, 1, 1}};

  // (a) flat case in exact integer arithmetic
  for (const Pair& p : pairs) {
    const auto d = spectra::degeneracy_nu_fd(p.a, p.b);
    if (d.status != spectra::DegeneracyStatus::found || d.nu.num != p.num ||
        d.nu.den != p.den) {
      detail = fmt("flat crossing (%d,%d)x(%d,%d) reported %lld/%lld, expected %lld/%lld",
                   p.a.n, p.a.m, p.b.n, p.b.m, d.nu.num, d.nu.den, p.num, p.den);
      return false;
    }
    // coincidence holds exactly: den c1 - num m1 == den c2 - num m2 over the integers
    const long long c1 = 2ll * p.a.n + std::abs(p.a.m) + 1;
    const long long c2 = 2ll * p.b.n + std::abs(p.b.m) + 1;
    if (d.nu.den * c1 - d.nu.num * p.a.m != d.nu.den * c2 - d.nu.num * p.b.m) {
      detail = fmt("rational coincidence fails for %lld/%lld", d.nu.num, d.nu.den);
      return false;
    }
  }

  // (b) deformed crossings: closed form vs substitution residual and bisection
  const double sigma = 0.02;
  Worst worst_res, worst_bis;
  for (const Pair& p : pairs) {
    const auto d = spectra::degeneracy_nu_fdd(p.a, p.b, sigma);
    if (d.status != spectra::DegeneracyStatus::found) {
      detail = fmt("deformed crossing missing for (%d,%d)x(%d,%d)", p.a.n, p.a.m, p.b.n,
                   p.b.m);
      return false;
    }
    worst_res.update(d.residual, fmt("%lld/%lld", p.num, p.den));
    auto gap = [&](double nu) {
      return spectra::fdd_dimensionless_energy(p.a, sigma, nu) -
             spectra::fdd_dimensionless_energy(p.b, sigma, nu);
    };
    double lo = std::max(0.0, d.nu - 0.05), hi = std::min(1.0, d.nu + 0.05);
    while (gap(lo) * gap(hi) > 0.0 && lo > 0.0) lo = std::max(0.0, lo - 0.05);
    if (gap(lo) * gap(hi) > 0.0) {
      detail = fmt("no bisection bracket near nu = %.6f", d.nu);
      return false;
    }
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      (gap(lo) * gap(mid) <= 0.0 ? hi : lo) = mid;
    }
    worst_bis.update(std::fabs(0.5 * (lo + hi) - d.nu), fmt("%lld/%lld", p.num, p.den));
  }

  // (c) fully polarized levels stay separated
  const double gap = spectra::landau_darboux_min_gap(sigma, 6, 6);
  detail = fmt("worst residual = %.2e, worst |closed - bisect| = %.2e, polarized min gap = %.2e",
               worst_res.value, worst_bis.value, gap);
  return worst_res.value <= 1e-12 && worst_bis.value <= 1e-12 && gap > 1e-9;
}

bool matched_field(std::string& detail) {
  Worst worst_r2;
  bool nonzero = true, growing = true;
  std::string flaw;
  for (double lambda : {0.1, 0.5, 1.0})
    for (int l = 0; l <= 3; ++l) {
      double prev = 0.0;
      for (int n = 0; n <= 3; ++n) {
        const double x = dispersion::omega_cut(n, l, 1.0, lambda);
        spectra::QuantumNumbers qn{n, l};
        const double r2 = dispersion::r_moment_fdd(qn, {1.0, x, lambda}, 2);
        worst_r2.update(std::fabs(r2 - qn.c()) / qn.c(),
                        fmt("n=%d l=%d la=%g", n, l, lambda));
        const double d = dispersion::omega_cut_p2_difference(n, l, 1.0, lambda);
        if (std::fabs(d) <= 1e-10) {
          nonzero = false;
          flaw = fmt("zero kinetic gap at n=%d l=%d la=%g", n, l, lambda);
        }
        if (n > 0 && std::fabs(d) <= std::fabs(prev)) {
          growing = false;
          flaw = fmt("kinetic gap shrank at n=%d l=%d la=%g", n, l, lambda);
        }
        prev = d;
      }
    }
  detail = fmt("worst relative <r^2> mismatch = %.2e at %s%s%s", worst_r2.value,
               worst_r2.where.c_str(), flaw.empty() ? "" : "; ", flaw.c_str());
  return worst_r2.value <= 1e-9 && nonzero && growing;
}

bool field_inversion(std::string& detail) {
  Worst worst;
  for (int n = 0; n <= 3; ++n)
    for (int l = 0; l <= 4; ++l)
      for (double lambda : {0.0, 0.1, 1.0})
        for (double wc : {0.5, 2.0})
          worst.update(dispersion::inverted_field_residual(n, l, 1.0, wc, lambda),
                       fmt("n=%d l=%d la=%g wc=%g", n, l, lambda, wc));
  detail = fmt("worst residual = %.2e at %s", worst.value, worst.where.c_str());
  return worst.value <= 1e-12;
}

bool surface_geometry(std::string& detail) {
  // curvature at the origin carries no rounding at all
  for (double lambda : {0.1, 0.5, 1.0, 2.7})
    if (geometry::scalar_curvature({lambda}, 0.0) != -4.0 * lambda) {
      detail = fmt("curvature at origin off for lambda = %g", lambda);
      return false;
    }
  Worst worst_ode, worst_small, worst_large;
  for (double lambda : {0.2, 1.0}) {
    geometry::SurfaceParams sp{lambda};
    for (double r : {1e-3, 0.01, 0.1, 1.0, 5.0, 20.0}) {
      const auto q = numerics::support::adaptive_finite(
          [&](double t) { return geometry::embedding_height_derivative(sp, t); }, 0.0, r);
      worst_ode.update(std::fabs(geometry::embedding_height(sp, r) - q.value),
                       fmt("la=%g r=%g", lambda, r));
    }
    const double r0 = 1e-4, r1 = 1e3;
    worst_small.update(
        std::fabs(geometry::embedding_height(sp, r0) / (r0 * r0) - std::sqrt(lambda / 2.0)),
        fmt("la=%g", lambda));
    worst_large.update(std::fabs(geometry::embedding_height(sp, r1) / (r1 * r1) -
                                 std::sqrt(3.0 * lambda) / 2.0),
                       fmt("la=%g", lambda));
  }
  detail = fmt("worst slope-equation residual = %.2e; asymptotic coefficient gaps %.2e (axis), "
               "%.2e (far field)",
               worst_ode.value, worst_small.value, worst_large.value);
  return worst_ode.value <= 1e-7 && worst_small.value <= 1e-3 && worst_large.value <= 1e-3;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"flat uncertainty product", 1.0, flat_uncertainty_product},
      {"flat ground-state entropy sum", 5.0, flat_entropy_sum},
      {"closed entropic moments vs quadrature", 120.0, closed_moments_vs_quadrature},
      {"deformation switch-off limits", 60.0, deformation_switch_off},
      {"momentum table normalization and kinetic moment", 300.0, momentum_tables},
      {"entropic uncertainty bound and saturation", 600.0, uncertainty_bound},
      {"degeneracy machinery", 10.0, degeneracy_machinery},
      {"matched-field spatial restoration", 30.0, matched_field},
      {"field inversion identity", 1.0, field_inversion},
      {"surface geometry", 5.0, surface_geometry},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    std::string detail;
    bool pass = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds <= c.budget_seconds;
    if (!in_budget) detail += fmt(" [over budget: %.1f s > %.0f s]", seconds, c.budget_seconds);
    const bool ok = pass && in_budget;
    std::printf("[%s] %zu %s: %s (%.1f s, budget %.0f s)\n", ok ? "PASS" : "FAIL", i + 1,
                c.name.c_str(), detail.c_str(), seconds, c.budget_seconds);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  std::printf("result: %zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
