#pragma once

#include "fdd/common.hpp"

namespace fdd::geometry {

// Deformation strength of the Darboux III surface. Strictly positive; the
// flat limit is handled by the callers, not by this module.
struct SurfaceParams {
  double lambda = 1.0;
  void validate() const {
    if (!(lambda > 0.0)) throw std::domain_error("SurfaceParams: lambda > 0 required");
  }
};

struct EmbeddedPoint {
  double r = 0.0;       // coordinate radius
  double geodesic = 0.0;  // geodesic radius S(r)
  double height = 0.0;  // embedding height h(r), h(0) = 0
};

// conformal metric factor mu(r) = 1 + lambda r^2
double metric_factor(const SurfaceParams& sp, double r);

// geodesic radius S(r) = r sqrt(1 + lambda r^2)
double geodesic_radius(const SurfaceParams& sp, double r);

// scalar curvature R(r) = -4 lambda / (1 + lambda r^2)^3
double scalar_curvature(const SurfaceParams& sp, double r);

// Height of the isometric embedding as a surface of revolution, fixed by
// h(0) = 0. Closed antiderivative with a series branch near the axis where
// the closed form loses digits to cancellation.
double embedding_height(const SurfaceParams& sp, double r);

// dh/dr = r sqrt(lambda (2 + 3 lambda r^2) / (1 + lambda r^2))
double embedding_height_derivative(const SurfaceParams& sp, double r);

EmbeddedPoint embed(const SurfaceParams& sp, double r);

// Comparison surfaces expressed as height over the same geodesic radius S:
// a paraboloid matched at infinity order, a hyperboloid, and the asymptotic
// cone of the embedded surface.
double paraboloid_height(const SurfaceParams& sp, double S);
double hyperboloid_height(const SurfaceParams& sp, double S);
double cone_height(double S);

}  // namespace fdd::geometry
