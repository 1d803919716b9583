#include "fdd/geometry.hpp"

#include <cmath>

namespace fdd::geometry {

double metric_factor(const SurfaceParams& sp, double r) {
  sp.validate();
  return 1.0 + sp.lambda * r * r;
}

double geodesic_radius(const SurfaceParams& sp, double r) {
  sp.validate();
  return r * std::sqrt(1.0 + sp.lambda * r * r);
}

double scalar_curvature(const SurfaceParams& sp, double r) {
  sp.validate();
  const double mu = 1.0 + sp.lambda * r * r;
  return -4.0 * sp.lambda / (mu * mu * mu);
}

double embedding_height(const SurfaceParams& sp, double r) {
  sp.validate();
  const double u = sp.lambda * r * r;
  if (u <= 1e-4) {
    // closed form cancels to O(u) near the axis; series keeps full precision
    return std::sqrt(0.5 * sp.lambda) * r * r *
           (1.0 + u / 8.0 - 3.0 * u * u / 32.0 + 41.0 * u * u * u / 512.0);
  }
  const double root = std::sqrt((1.0 + u) * (2.0 + 3.0 * u));
  const double sqrt3 = 1.7320508075688772935;
  const double at_r = 3.0 * root - sqrt3 * std::asinh(std::sqrt(2.0 + 3.0 * u));
  const double at_0 = 3.0 * std::sqrt(2.0) - sqrt3 * std::asinh(std::sqrt(2.0));
  return (at_r - at_0) / (6.0 * std::sqrt(sp.lambda));
}

double embedding_height_derivative(const SurfaceParams& sp, double r) {
  sp.validate();
  const double u = sp.lambda * r * r;
  return r * std::sqrt(sp.lambda * (2.0 + 3.0 * u) / (1.0 + u));
}

EmbeddedPoint embed(const SurfaceParams& sp, double r) {
  return {r, geodesic_radius(sp, r), embedding_height(sp, r)};
}

double paraboloid_height(const SurfaceParams& sp, double S) {
  sp.validate();
  return std::sqrt(0.5 * sp.lambda) * S * S;
}

double hyperboloid_height(const SurfaceParams& sp, double S) {
  sp.validate();
  const double a = 1.0 / std::sqrt(2.0 * sp.lambda);
  // sqrt(S^2 + a^2) - a, written to avoid cancellation at small S
  return S * S / (std::sqrt(S * S + a * a) + a);
}

double cone_height(double S) { return 0.5 * std::sqrt(3.0) * S; }

}  // namespace fdd::geometry
