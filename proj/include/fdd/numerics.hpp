#pragma once

#include <functional>
#include <vector>

#include "fdd/common.hpp"

namespace fdd::numerics {

// Absolute/relative targets for adaptive integration. The request is met when
// the accumulated error estimate drops below max(abs_tol, rel_tol * |value|).
struct Tolerance {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;  // >= 0 always
  long evaluations = 0;
};

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes and weights for integral_0^inf f(t) t^alpha e^{-t} dt ~ sum w_i f(x_i).
// order in [1, 512], alpha > -1. Nodes are strictly increasing and positive.
// Built by the Golub-Welsch diagonalization of the Jacobi matrix.
GaussRule gauss_laguerre_rule(int order, double alpha);

// integral_0^inf f(t) dt for integrands with no non-integrable singularity and
// at-least-exponential or Gaussian-like decay. Maps t = u / (1 - u) onto (0,1)
// and refines the worst subinterval with an embedded 15/7 point Gauss pair.
// Throws ConvergenceError when the subdivision budget is exhausted.
QuadratureResult adaptive_semi_infinite(const std::function<double(double)>& f,
                                        const Tolerance& tol = {});

// integral_0^inf g(r) J_m(p r) r dr for envelopes g with Gaussian-like decay.
// Partitions along Bessel zeros of J_m(p r), integrates panels with fixed
// Gauss rules, and sums partial sums with epsilon-algorithm acceleration as a
// fallback when the direct tail has not converged. p = 0 reduces to the plain
// radial integral for m = 0 and to zero for m > 0.
QuadratureResult oscillatory_hankel_integrate(const std::function<double(double)>& g,
                                              int m, double p,
                                              const Tolerance& tol = {});

// Supporting utilities. The contract surface of this module is the three
// operations above; everything below exists to serve the higher modules.
namespace support {

// Gauss-Legendre rule on [-1, 1], cached per order. Thread safe.
const GaussRule& gauss_legendre_rule(int order);

// Adaptive integral over a finite interval with the same 15/7 pair and
// worst-interval refinement used by adaptive_semi_infinite.
QuadratureResult adaptive_finite(const std::function<double(double)>& f, double a,
                                 double b, const Tolerance& tol = {});

// Monotone piecewise-cubic interpolant (Fritsch-Carlson slopes). Used for
// integrating transforms of tabulated densities without introducing the
// oscillation artifacts of unconstrained splines.
class PchipInterpolant {
 public:
  PchipInterpolant(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;
  double x_front() const { return x_.front(); }
  double x_back() const { return x_.back(); }

  // integral over the tabulated range of fn(x, s(x)) where s is the
  // interpolant, via a fixed 8 point Gauss rule per interval.
  double integrate_transformed(const std::function<double(double, double)>& fn) const;

  // plain integral of the interpolant itself
  double integrate() const;

 private:
  std::vector<double> x_, y_, d_;  // nodes, values, endpoint-safe slopes
  std::size_t locate(double x) const;
  double eval_interval(std::size_t i, double x) const;
};

}  // namespace support

}  // namespace fdd::numerics
