#include "fdd/momentum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fdd/parallel.hpp"

namespace fdd::momentum {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559005768;

}  // namespace

double fdd_momentum_wavefunction(const spectra::QuantumNumbers& qn,
                                 const spectra::SystemParams& sp, double p,
                                 const numerics::Tolerance& tol) {
  const int l = qn.l();
  auto g = [&](double r) { return states::fdd_radial_wavefunction(qn, sp, r); };
  auto res = numerics::oscillatory_hankel_integrate(g, l, p, tol);
  return std::fabs(res.value);
}

std::vector<double> default_momentum_grid(const spectra::QuantumNumbers& qn,
                                          const spectra::SystemParams& sp, int points,
                                          double p_max) {
  if (points < 64) throw std::invalid_argument("default_momentum_grid: points >= 64");
  qn.validate();
  sp.validate();
  if (p_max <= 0.0) p_max = 6.0 * std::sqrt(sp.omega_t() * qn.c());

  const int n_geo = points / 3;
  const int n_lin = points - 1 - n_geo;
  std::vector<double> grid;
  grid.reserve(points);
  grid.push_back(0.0);
  const double knee = 0.1 * p_max;
  const double lo = 1e-4 * p_max;
  const double ratio = std::pow(knee / lo, 1.0 / (n_geo - 1));
  double v = lo;
  for (int i = 0; i < n_geo; ++i) {
    grid.push_back(v);
    v *= ratio;
  }
  grid[n_geo] = knee;
  for (int i = 1; i <= n_lin; ++i) grid.push_back(knee + (p_max - knee) * i / n_lin);
  return grid;
}

MomentumTable fdd_momentum_density_table(const spectra::QuantumNumbers& qn,
                                         const spectra::SystemParams& sp, int points,
                                         double p_max, const numerics::Tolerance& tol) {
  const bool auto_extend = p_max <= 0.0;
  double target = auto_extend ? 6.0 * std::sqrt(sp.omega_t() * qn.c()) : p_max;

  MomentumTable table;
  table.qn = qn;
  table.params = sp;
  for (int attempt = 0;; ++attempt) {
    table.p = default_momentum_grid(qn, sp, points, target);
    table.psi_tilde_magnitude.assign(table.p.size(), 0.0);
    parallel::parallel_for(table.p.size(), [&](std::size_t i) {
      table.psi_tilde_magnitude[i] =
          fdd_momentum_wavefunction(qn, sp, table.p[i], tol) / std::sqrt(kTwoPi);
    });
    table.gamma.resize(table.p.size());
    double peak = 0.0;
    for (std::size_t i = 0; i < table.p.size(); ++i) {
      table.gamma[i] = table.psi_tilde_magnitude[i] * table.psi_tilde_magnitude[i];
      peak = std::max(peak, table.gamma[i]);
    }
    const bool covered = peak > 0.0 && table.gamma.back() <= 1e-14 * peak;
    if (covered) break;
    if (!auto_extend)
      throw std::runtime_error(
          "fdd_momentum_density_table: p_max " + std::to_string(target) +
          " truncates the density tail; p_max >= " + std::to_string(target * 1.35) +
          " would cover it");
    if (attempt >= 8)
      throw ConvergenceError("fdd_momentum_density_table: tail never fell below coverage bar",
                             table.gamma.back(), 0.0);
    target *= 1.35;
  }

  numerics::support::PchipInterpolant interp(table.p, table.gamma);
  const double norm =
      interp.integrate_transformed([](double x, double s) { return kTwoPi * x * s; });
  table.norm_residual = std::fabs(norm - 1.0);
  return table;
}

double table_second_moment(const MomentumTable& table) {
  numerics::support::PchipInterpolant interp(table.p, table.gamma);
  return interp.integrate_transformed(
      [](double x, double s) { return kTwoPi * x * x * x * s; });
}

states::DensityProfile to_density_profile(const MomentumTable& table) {
  states::DensityProfile prof;
  prof.space = Space::momentum;
  prof.system = table.params.lambda == 0.0 ? System::fd : System::fdd;
  prof.qn = table.qn;
  prof.params = table.params;
  prof.abscissae = table.p;
  prof.values = table.gamma;
  return prof;
}

}  // namespace fdd::momentum
