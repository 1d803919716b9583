#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fdd/specfun.hpp"

using namespace fdd;

TEST_CASE("log gamma matches reflection-free anchors") {
  const double half_log_pi = 0.5 * std::log(3.14159265358979323846);
  CHECK(specfun::log_gamma(0.5) == doctest::Approx(half_log_pi).epsilon(1e-14));
  CHECK(std::fabs(specfun::log_gamma(1.0)) < 1e-14);
  CHECK(std::fabs(specfun::log_gamma(2.0)) < 1e-14);
  CHECK(specfun::log_gamma(6.0) == doctest::Approx(std::log(120.0)).epsilon(1e-14));
  // recurrence log Gamma(x + 1) = log Gamma(x) + log x
  const double x = 3.7;
  CHECK(specfun::log_gamma(x + 1.0) - specfun::log_gamma(x) ==
        doctest::Approx(std::log(x)).epsilon(1e-13));
  CHECK(specfun::log_gamma(151.5) ==
        doctest::Approx(std::lgamma(151.5)).epsilon(1e-13));
  CHECK_THROWS_AS(specfun::log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(specfun::log_gamma(-2.5), std::domain_error);
}

TEST_CASE("generalized laguerre basics") {
  CHECK(specfun::generalized_laguerre(0, 1.3, 4.2) == doctest::Approx(1.0));
  // L_1^a(x) = 1 + a - x
  CHECK(specfun::generalized_laguerre(1, 0.5, 0.8) == doctest::Approx(0.7).epsilon(1e-14));
  // value at the origin is the binomial C(n + a, n)
  CHECK(specfun::generalized_laguerre(5, 2.5, 0.0) ==
        doctest::Approx(specfun::generalized_binomial(7.5, 5)).epsilon(1e-13));
}

TEST_CASE("generalized laguerre agrees with the standard library for integer order") {
  for (int n : {0, 1, 3, 7, 15}) {
    for (int a : {0, 1, 3}) {
      for (double x : {0.1, 1.0, 4.2, 17.5}) {
        INFO("n = ", n, ", a = ", a, ", x = ", x);
        const double mine = specfun::generalized_laguerre(n, (double)a, x);
        const double ref = std::assoc_laguerre((unsigned)n, (unsigned)a, x);
        CHECK(mine == doctest::Approx(ref).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("laguerre coefficients reconstruct the polynomial") {
  // L_2^0 = 1 - 2x + x^2/2 exactly
  const auto c2 = specfun::laguerre_coefficients(2, 0.0);
  REQUIRE(c2.size() == 3);
  CHECK(c2[0] == doctest::Approx(1.0));
  CHECK(c2[1] == doctest::Approx(-2.0));
  CHECK(c2[2] == doctest::Approx(0.5));

  const auto c = specfun::laguerre_coefficients(6, 1.5);
  for (double x : {0.3, 1.7, 6.4}) {
    double horner = 0.0;
    for (std::size_t j = c.size(); j-- > 0;) horner = horner * x + c[j];
    CHECK(horner == doctest::Approx(specfun::generalized_laguerre(6, 1.5, x)).epsilon(1e-11));
  }
}

TEST_CASE("generalized binomial") {
  CHECK(specfun::generalized_binomial(5.0, 2) == doctest::Approx(10.0));
  CHECK(specfun::generalized_binomial(7.5, 0) == doctest::Approx(1.0));
  // integer upper argument smaller than k hits a zero factor
  CHECK(specfun::generalized_binomial(3.0, 5) == doctest::Approx(0.0));
  CHECK(specfun::generalized_binomial(-0.5, 2) == doctest::Approx(0.375).epsilon(1e-14));
}

TEST_CASE("bessel j spot values across the evaluation regions") {
  // small argument, ascending series
  CHECK(specfun::bessel_j(0, 0.0) == doctest::Approx(1.0));
  CHECK(specfun::bessel_j(3, 0.0) == doctest::Approx(0.0));
  CHECK(specfun::bessel_j(0, 1.0) == doctest::Approx(0.76519768655796655145).epsilon(1e-13));
  CHECK(specfun::bessel_j(1, 1.0) == doctest::Approx(0.44005058574493351596).epsilon(1e-13));
  CHECK(specfun::bessel_j(3, 8.0) == doctest::Approx(-0.29113220706595224938).epsilon(1e-13));
  // large argument
  CHECK(specfun::bessel_j(0, 35.1) == doctest::Approx(-0.13059808885484759677).epsilon(1e-13));
  CHECK(specfun::bessel_j(2, 50.0) == doctest::Approx(-0.059712800794258820511).epsilon(1e-12));
  CHECK(specfun::bessel_j(5, 60.0) == doctest::Approx(0.02745474422834409975).epsilon(1e-12));
  // high order at moderate argument
  CHECK(specfun::bessel_j(10, 40.0) == doctest::Approx(0.11938336278226095161).epsilon(1e-12));
}

TEST_CASE("bessel j sum rule ties the evaluation regions together") {
  // J_0(x)^2 + 2 sum_k J_k(x)^2 = 1; at x = 40 low orders evaluate through the
  // large-argument expansion and high orders through backward recurrence, so
  // the sum only closes if the two regions agree
  for (double x : {7.0, 40.0}) {
    double sum = specfun::bessel_j(0, x) * specfun::bessel_j(0, x);
    // orders past the turning point still matter at x = 40; the tail below
    // k = 75 is far smaller than the tolerance
    for (int k = 1; k <= 75; ++k) {
      const double v = specfun::bessel_j(k, x);
      sum += 2.0 * v * v;
    }
    INFO("x = ", x);
    CHECK(std::fabs(sum - 1.0) < 1e-12);
  }
}

TEST_CASE("bessel j three-term recurrence holds across the region boundary") {
  const double x = 36.5;
  for (int m = 1; m <= 8; ++m) {
    const double lhs = specfun::bessel_j(m - 1, x) + specfun::bessel_j(m + 1, x);
    const double rhs = 2.0 * m / x * specfun::bessel_j(m, x);
    INFO("m = ", m);
    CHECK(std::fabs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("bessel zeros") {
  const auto z0 = specfun::bessel_j_zeros(0, 30);
  REQUIRE(z0.size() == 30);
  CHECK(z0[0] == doctest::Approx(2.40482555769577276862).epsilon(1e-14));
  const auto z1 = specfun::bessel_j_zeros(1, 5);
  CHECK(z1[0] == doctest::Approx(3.83170597020751231561).epsilon(1e-14));
  const auto z4 = specfun::bessel_j_zeros(4, 8);
  CHECK(z4[2] == doctest::Approx(14.3725366716175896786).epsilon(1e-13));

  for (const auto& [m, zeros] : {std::pair{0, z0}, std::pair{4, z4}}) {
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      if (i > 0) CHECK(zeros[i] > zeros[i - 1]);
      CHECK(std::fabs(specfun::bessel_j(m, zeros[i])) < 1e-10);
    }
    // spacing approaches pi from above for high zeros
    const double gap = zeros.back() - zeros[zeros.size() - 2];
    CHECK(std::fabs(gap - 3.14159265358979323846) < 0.05);
  }
}

TEST_CASE("scaled exponential integral") {
  CHECK(specfun::expint_scaled(1, 1.0) ==
        doctest::Approx(0.596347362323194074341).epsilon(1e-13));
  CHECK(specfun::expint_scaled(2, 0.5) ==
        doctest::Approx(0.538544683758134765584).epsilon(1e-13));
  CHECK(specfun::expint_scaled(3, 3.7) ==
        doctest::Approx(0.158294531539857682411).epsilon(1e-13));

  // recurrence n ehat_{n+1}(z) = 1 - z ehat_n(z), valid in both branches
  for (double z : {0.3, 0.9, 1.5, 8.0}) {
    for (int n = 1; n <= 5; ++n) {
      const double lhs = n * specfun::expint_scaled(n + 1, z);
      const double rhs = 1.0 - z * specfun::expint_scaled(n, z);
      INFO("n = ", n, ", z = ", z);
      CHECK(std::fabs(lhs - rhs) < 1e-13);
    }
  }

  // asymptotic flattening: z ehat_1(z) = 1 - 1/z + O(1/z^2)
  const double z = 1e3;
  CHECK(std::fabs(z * specfun::expint_scaled(1, z) - 1.0) < 2e-3);
}

TEST_CASE("symmetric lauricella contraction") {
  // degree zero factors collapse to one regardless of the remaining spec
  specfun::SymmetricLauricellaSpec trivial;
  trivial.a = 4.5;
  trivial.n = 0;
  trivial.c = 2.0;
  trivial.x = 0.7;
  trivial.copies = 6;
  CHECK(specfun::lauricella_fa_symmetric(trivial) == doctest::Approx(1.0));

  // single factor against the brute-force nested sum
  specfun::SymmetricLauricellaSpec single{2.0, 3, 1.5, 0.4, 1};
  const double brute1 = specfun::lauricella_fa_bruteforce(2.0, {-3.0}, {1.5}, {0.4});
  CHECK(specfun::lauricella_fa_symmetric(single) == doctest::Approx(brute1).epsilon(1e-13));

  // several identical factors
  specfun::SymmetricLauricellaSpec multi{3.0, 2, 2.0, 0.5, 4};
  const double brute4 = specfun::lauricella_fa_bruteforce(
      3.0, {-2.0, -2.0, -2.0, -2.0}, {2.0, 2.0, 2.0, 2.0}, {0.5, 0.5, 0.5, 0.5});
  CHECK(specfun::lauricella_fa_symmetric(multi) == doctest::Approx(brute4).epsilon(1e-12));
}

TEST_CASE("brute-force lauricella on a hand-expandable case") {
  // single variable, b = -1: F = 1 - a x / c
  const double v = specfun::lauricella_fa_bruteforce(2.0, {-1.0}, {3.0}, {0.7});
  CHECK(v == doctest::Approx(1.0 - 2.0 * 0.7 / 3.0).epsilon(1e-14));
}
