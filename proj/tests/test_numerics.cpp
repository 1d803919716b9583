#include <doctest.h>

#include <cmath>
#include <vector>

#include "fdd/numerics.hpp"
#include "fdd/specfun.hpp"

using namespace fdd;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("gauss laguerre rule order 2 is the textbook pair") {
  const auto rule = numerics::gauss_laguerre_rule(2, 0.0);
  REQUIRE(rule.nodes.size() == 2);
  // nodes 2 -+ sqrt(2), weights (2 +- sqrt(2)) / 4
  CHECK(rule.nodes[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-14));
  CHECK(rule.nodes[1] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-14));
  CHECK(rule.weights[0] == doctest::Approx((2.0 + std::sqrt(2.0)) / 4.0).epsilon(1e-14));
  CHECK(rule.weights[1] == doctest::Approx((2.0 - std::sqrt(2.0)) / 4.0).epsilon(1e-14));
}

TEST_CASE("gauss laguerre rule integrates monomials exactly") {
  // order N is exact through degree 2N - 1 against the weight t^alpha e^-t
  const double alpha = 0.5;
  const int order = 6;
  const auto rule = numerics::gauss_laguerre_rule(order, alpha);
  for (int k = 0; k <= 2 * order - 1; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      sum += rule.weights[i] * std::pow(rule.nodes[i], k);
    const double exact = std::exp(specfun::log_gamma(alpha + k + 1.0));
    CHECK(sum == doctest::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("gauss laguerre rule nodes increase and weights are positive") {
  const auto rule = numerics::gauss_laguerre_rule(40, 2.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    CHECK(rule.weights[i] > 0.0);
    if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    CHECK(rule.nodes[i] > 0.0);
  }
}

TEST_CASE("gauss laguerre rule rejects bad arguments") {
  CHECK_THROWS(numerics::gauss_laguerre_rule(0, 0.0));
  CHECK_THROWS(numerics::gauss_laguerre_rule(4, -1.0));
}

TEST_CASE("semi-infinite quadrature on exponential and gaussian tails") {
  auto r1 = numerics::adaptive_semi_infinite([](double t) { return std::exp(-t); });
  CHECK(r1.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r1.abs_error_estimate >= 0.0);

  auto r2 = numerics::adaptive_semi_infinite([](double t) { return std::exp(-t * t); });
  CHECK(r2.value == doctest::Approx(std::sqrt(kPi) / 2.0).epsilon(1e-12));

  // integral t^2 e^-t log(1 + t) dt, closed value from the exponential integral
  auto r3 = numerics::adaptive_semi_infinite(
      [](double t) { return t * t * std::exp(-t) * std::log1p(t); });
  CHECK(r3.value == doctest::Approx(2.5963473623231940743).epsilon(1e-12));
}

TEST_CASE("finite-interval quadrature") {
  auto r1 = numerics::support::adaptive_finite([](double x) { return std::sin(x); }, 0.0, kPi);
  CHECK(r1.value == doctest::Approx(2.0).epsilon(1e-13));

  auto r2 = numerics::support::adaptive_finite([](double x) { return std::exp(x); }, 0.0, 2.0);
  CHECK(r2.value == doctest::Approx(std::exp(2.0) - 1.0).epsilon(1e-13));

  // degenerate interval
  auto r3 = numerics::support::adaptive_finite([](double x) { return x; }, 1.0, 1.0);
  CHECK(r3.value == doctest::Approx(0.0));
}

TEST_CASE("gauss legendre rule is exact on high-degree polynomials") {
  const auto& rule = numerics::support::gauss_legendre_rule(8);
  REQUIRE(rule.nodes.size() == 8);
  for (int k = 0; k <= 15; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      sum += rule.weights[i] * std::pow(rule.nodes[i], k);
    const double exact = (k % 2 == 0) ? 2.0 / (k + 1.0) : 0.0;
    CHECK(std::fabs(sum - exact) < 1e-14);
  }
}

TEST_CASE("hankel integration reproduces the gaussian transform pair") {
  // integral e^{-a r^2} J_0(p r) r dr = e^{-p^2 / 4a} / (2a)
  const double a = 0.5;
  for (double p : {0.0, 0.5, 2.0, 8.0, 20.0}) {
    auto res = numerics::oscillatory_hankel_integrate(
        [a](double r) { return std::exp(-a * r * r); }, 0, p);
    const double exact = std::exp(-p * p / (4.0 * a)) / (2.0 * a);
    INFO("p = ", p);
    CHECK(std::fabs(res.value - exact) < 1e-12);
  }
}

TEST_CASE("hankel integration with angular index one") {
  // integral r e^{-r^2} J_1(p r) r dr = (p / 4) e^{-p^2 / 4}
  for (double p : {0.3, 1.0, 4.0, 12.0}) {
    auto res = numerics::oscillatory_hankel_integrate(
        [](double r) { return r * std::exp(-r * r); }, 1, p);
    const double exact = 0.25 * p * std::exp(-p * p / 4.0);
    INFO("p = ", p);
    CHECK(std::fabs(res.value - exact) < 1e-12);
  }
  // p = 0 kills every m > 0 transform
  auto zero = numerics::oscillatory_hankel_integrate(
      [](double r) { return r * std::exp(-r * r); }, 1, 0.0);
  CHECK(zero.value == 0.0);
}

TEST_CASE("pchip interpolation is exact at nodes and monotone between them") {
  std::vector<double> x, y;
  for (int i = 0; i <= 12; ++i) {
    const double xi = 0.25 * i;
    x.push_back(xi);
    y.push_back(xi * xi * xi);
  }
  numerics::support::PchipInterpolant s(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(s(x[i]) == doctest::Approx(y[i]).epsilon(1e-15));

  // monotone data stays monotone: no spline overshoot anywhere on a fine scan
  double prev = s(x.front());
  for (int k = 1; k <= 600; ++k) {
    const double xi = x.front() + (x.back() - x.front()) * k / 600.0;
    const double v = s(xi);
    CHECK(v >= prev - 1e-14);
    prev = v;
  }
  CHECK(s.x_front() == doctest::Approx(0.0));
  CHECK(s.x_back() == doctest::Approx(3.0));
}

TEST_CASE("pchip integration") {
  // linear data integrates exactly, and the transformed integral with the
  // identity transform must agree with the plain one
  std::vector<double> x{0.0, 0.5, 1.25, 2.0, 3.0};
  std::vector<double> y;
  for (double xi : x) y.push_back(2.0 * xi + 1.0);
  numerics::support::PchipInterpolant s(x, y);
  CHECK(s.integrate() == doctest::Approx(3.0 * 3.0 + 3.0).epsilon(1e-14));
  const double t = s.integrate_transformed([](double, double v) { return v; });
  CHECK(t == doctest::Approx(s.integrate()).epsilon(1e-14));

  // weighted moment of the interpolated line: integral x (2x + 1) dx on [0, 3]
  const double m1 = s.integrate_transformed([](double xi, double v) { return xi * v; });
  CHECK(m1 == doctest::Approx(2.0 * 9.0 + 4.5).epsilon(1e-13));
}

TEST_CASE("quadrature honors the requested tolerance scales") {
  numerics::Tolerance tight;
  tight.abs_tol = 1e-13;
  tight.rel_tol = 1e-13;
  auto res = numerics::adaptive_semi_infinite(
      [](double t) { return std::exp(-t) * std::cos(3.0 * t); }, tight);
  // closed value 1 / (1 + 9)
  CHECK(std::fabs(res.value - 0.1) < 1e-12);
}
