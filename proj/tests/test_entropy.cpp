#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fdd/entropy.hpp"
#include "fdd/momentum.hpp"
#include "fdd/spectra.hpp"

using namespace fdd;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("closed position moment of the flat ground state") {
  // W_2 = omega_t / (2 pi) for the gaussian ground density
  for (double wc : {0.0, 3.0}) {
    spectra::SystemParams sp{1.0, wc, 0.0};
    const double w2 = entropy::entropic_moment_fdd_closed({0, 0}, sp, 2);
    CHECK(w2 == doctest::Approx(sp.omega_t() / (2.0 * kPi)).epsilon(1e-13));
  }
}

TEST_CASE("closed position moments agree with direct quadrature") {
  struct Case { int n, m, alpha; double wc, lambda; };
  for (const Case& c : {Case{1, 1, 2, 1.0, 0.1}, Case{0, 2, 2, 0.0, 1.0},
                        Case{2, 0, 3, 2.0, 0.5}, Case{3, 2, 3, 0.0, 0.1},
                        Case{2, 1, 2, 1.0, 0.0}}) {
    spectra::QuantumNumbers qn{c.n, c.m};
    spectra::SystemParams sp{1.0, c.wc, c.lambda};
    const double closed = entropy::entropic_moment_fdd_closed(qn, sp, c.alpha);
    const double quad = entropy::entropic_moment_position_quadrature(qn, sp, (double)c.alpha);
    INFO("n = ", c.n, ", m = ", c.m, ", alpha = ", c.alpha, ", lambda = ", c.lambda);
    CHECK(closed == doctest::Approx(quad).epsilon(1e-8));
  }
  // regression pin for a deformed excited state
  CHECK(entropy::entropic_moment_fdd_closed({3, 2}, {1.0, 0.0, 0.1}, 3) ==
        doctest::Approx(1.0893976781984388117e-04).epsilon(1e-10));
}

TEST_CASE("closed flat momentum moments agree with direct quadrature") {
  spectra::QuantumNumbers qn{1, 1};
  spectra::SystemParams sp{1.0, 1.0, 0.0};
  for (int beta : {2, 3}) {
    const double closed =
        std::exp(entropy::log_entropic_moment_fd_momentum_closed(qn, sp, beta));
    const double quad = entropy::entropic_moment_fd_momentum_quadrature(qn, sp, (double)beta);
    INFO("beta = ", beta);
    CHECK(closed == doctest::Approx(quad).epsilon(1e-9));
  }
  CHECK_THROWS_AS(entropy::log_entropic_moment_fd_momentum_closed(qn, {1.0, 0.0, 0.5}, 2),
                  std::domain_error);
}

TEST_CASE("flat moments scale with the total frequency") {
  // position W_a picks up s^{a-1}, momentum W_b picks up s^{1-b}, s = omega_t / omega
  spectra::QuantumNumbers qn{2, 1};
  const double s = std::sqrt(5.0);
  const double wp_field = entropy::entropic_moment_fdd_closed(qn, {1.0, 2.0, 0.0}, 2);
  const double wp_plain = entropy::entropic_moment_fdd_closed(qn, {1.0, 0.0, 0.0}, 2);
  CHECK(wp_field / wp_plain == doctest::Approx(s).epsilon(1e-13));
  const double lm_field = entropy::log_entropic_moment_fd_momentum_closed(qn, {1.0, 2.0, 0.0}, 3);
  const double lm_plain = entropy::log_entropic_moment_fd_momentum_closed(qn, {1.0, 0.0, 0.0}, 3);
  CHECK(std::exp(lm_field - lm_plain) == doctest::Approx(std::pow(s, -2.0)).epsilon(1e-12));
}

TEST_CASE("order conversions") {
  CHECK(entropy::renyi_from_log_moment(-1.7, 2.0) == doctest::Approx(1.7).epsilon(1e-15));
  CHECK(entropy::tsallis_from_moment(0.25, 2.0) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK_THROWS_AS(entropy::renyi_from_log_moment(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(entropy::tsallis_from_moment(1.0, 1.0), std::domain_error);
  // regression pin: second-order position entropy of a deformed excited state
  const double lw = entropy::log_entropic_moment_fdd_closed({1, 0}, {1.0, 1.0, 0.1}, 2);
  CHECK(entropy::renyi_from_log_moment(lw, 2.0) ==
        doctest::Approx(2.5949367348814167).epsilon(1e-12));
}

TEST_CASE("closed moment rejects unusable orders") {
  CHECK_THROWS_AS(entropy::log_entropic_moment_fdd_closed({0, 0}, {1.0, 0.0, 0.1}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(entropy::entropic_moment_position_quadrature({0, 0}, {1.0, 0.0, 0.1}, 0.0),
                  std::domain_error);
}

TEST_CASE("flat shannon entropies") {
  // ground state: 1 + log pi -+ log omega_t, and the two spaces sum to the bound
  spectra::SystemParams sp{2.0, 0.0, 0.0};
  const double pos = entropy::shannon_fd_closed({0, 0}, sp, Space::position);
  const double mom = entropy::shannon_fd_closed({0, 0}, sp, Space::momentum);
  CHECK(pos == doctest::Approx(1.0 + std::log(kPi) - std::log(2.0)).epsilon(1e-13));
  CHECK(mom == doctest::Approx(1.0 + std::log(kPi) + std::log(2.0)).epsilon(1e-13));
  CHECK(pos + mom == doctest::Approx(2.0 * (1.0 + std::log(kPi))).epsilon(1e-13));
  // the sum is field independent
  spectra::SystemParams field{1.0, 3.0, 0.0};
  const double sum = entropy::shannon_fd_closed({0, 0}, field, Space::position) +
                     entropy::shannon_fd_closed({0, 0}, field, Space::momentum);
  CHECK(sum == doctest::Approx(2.0 * (1.0 + std::log(kPi))).epsilon(1e-12));
  CHECK_THROWS_AS(entropy::shannon_fd_closed({0, 0}, {1.0, 0.0, 0.5}, Space::position),
                  std::domain_error);
}

TEST_CASE("flat shannon closed forms agree with quadrature in both spaces") {
  spectra::QuantumNumbers qn{2, 1};
  spectra::SystemParams sp{1.0, 1.0, 0.0};
  CHECK(entropy::shannon_fd_closed(qn, sp, Space::position) ==
        doctest::Approx(entropy::shannon_position_quadrature(qn, sp)).epsilon(1e-9));
  CHECK(entropy::shannon_fd_closed(qn, sp, Space::momentum) ==
        doctest::Approx(entropy::shannon_fd_momentum_quadrature(qn, sp)).epsilon(1e-9));
}

TEST_CASE("deformed position shannon entropy") {
  // assembled closed expression validated against the direct quadrature
  struct Case { int n, m; double lambda, wc, value; };
  for (const Case& c : {Case{0, 0, 1.0, 0.0, 3.5273854391464743},
                        Case{1, 0, 0.5, 1.0, 3.792799684677},
                        Case{1, 1, 0.5, 1.0, 3.847827798991},
                        Case{2, 2, 0.1, 2.0, 3.177096816097},
                        Case{3, 1, 1.0, 0.0, 6.627234749150},
                        Case{0, 2, 0.3, 2.0, 2.405717669477}}) {
    spectra::QuantumNumbers qn{c.n, c.m};
    spectra::SystemParams sp{1.0, c.wc, c.lambda};
    const auto rep = entropy::shannon_fdd_position(qn, sp);
    INFO("n = ", c.n, ", m = ", c.m, ", lambda = ", c.lambda, ", wc = ", c.wc);
    CHECK(rep.value == doctest::Approx(c.value).epsilon(1e-9));
    CHECK(!rep.quadrature_authoritative);
    CHECK(rep.diagnostic.empty());
    CHECK(std::fabs(rep.assembled - rep.direct) <= 1e-7);
  }
}

TEST_CASE("deformed shannon entropy flattens onto the closed flat value") {
  spectra::QuantumNumbers qn{1, 1};
  const double deformed = entropy::shannon_fdd_position(qn, {1.0, 0.5, 1e-10}).value;
  const double flat = entropy::shannon_fd_closed(qn, {1.0, 0.5, 0.0}, Space::position);
  CHECK(deformed == doctest::Approx(flat).epsilon(1e-6));
}

TEST_CASE("tabulated momentum entropies against independent references") {
  // external 30-digit evaluations of the deformed ground state transforms
  {
    const auto t = momentum::fdd_momentum_density_table({0, 0}, {1.0, 0.0, 0.5}, 1024);
    CHECK(std::fabs(entropy::entropic_moment_table(t, 2.0) - 0.35386863237654925) < 1e-6);
    CHECK(std::fabs(entropy::shannon_table(t) - 1.3219421272735270) < 5e-6);
  }
  {
    const auto t = momentum::fdd_momentum_density_table({0, 0}, {1.0, 0.0, 1.0}, 1024);
    CHECK(std::fabs(entropy::entropic_moment_table(t, 2.0) - 0.58495471207618255) < 1e-6);
    CHECK(std::fabs(entropy::shannon_table(t) - 0.85086879759193679) < 5e-6);
    CHECK_THROWS_AS(entropy::entropic_moment_table(t, 0.0), std::domain_error);
  }
}

TEST_CASE("renyi uncertainty saturates exactly on the flat ground state") {
  for (double wc : {0.0, 2.0}) {
    const auto rep = entropy::renyi_uncertainty({0, 0}, {1.0, wc, 0.0}, 2.0 / 3.0);
    INFO("wc = ", wc);
    CHECK(std::fabs(rep.xi) <= 1e-12);
    CHECK(rep.beta == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(std::fabs(entropy::tsallis_uncertainty({0, 0}, {1.0, wc, 0.0}, 2.0 / 3.0)) <= 1e-12);
  }
}

TEST_CASE("renyi uncertainty on a deformed ground state") {
  spectra::QuantumNumbers qn{0, 0};
  spectra::SystemParams sp{1.0, 0.0, 0.5};
  const auto rep = entropy::renyi_uncertainty(qn, sp, 2.0 / 3.0);
  CHECK(rep.alpha == doctest::Approx(2.0 / 3.0));
  // conjugacy 1/alpha + 1/beta = 2
  CHECK(1.0 / rep.alpha + 1.0 / rep.beta == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(rep.moment_position == doctest::Approx(2.8711669185475261).epsilon(1e-10));
  CHECK(rep.bound == doctest::Approx(4.1990022765832391).epsilon(1e-14));
  CHECK(rep.xi > 0.0);
  CHECK(std::fabs(rep.xi - 3.9828062337274872e-03) < 1e-6);

  // a prebuilt table matching the state reproduces the local computation
  const auto table = momentum::fdd_momentum_density_table(qn, sp, 1024);
  const auto rep2 = entropy::renyi_uncertainty(qn, sp, 2.0 / 3.0, {}, &table);
  CHECK(rep2.xi == doctest::Approx(rep.xi).epsilon(1e-12));
  // and a mismatched one is rejected
  const auto wrong = momentum::fdd_momentum_density_table({0, 1}, sp, 256);
  CHECK_THROWS_AS(entropy::renyi_uncertainty(qn, sp, 2.0 / 3.0, {}, &wrong),
                  std::invalid_argument);

  const double xt = entropy::tsallis_uncertainty(qn, sp, 2.0 / 3.0, {}, &table);
  CHECK(xt > 0.0);
  CHECK(std::fabs(xt - 6.8631892287318585e-04) < 1e-6);
}

TEST_CASE("renyi uncertainty rejects orders outside the conjugate window") {
  for (double alpha : {0.4, 0.5, 1.0, 1.5}) {
    INFO("alpha = ", alpha);
    CHECK_THROWS_AS(entropy::renyi_uncertainty({0, 0}, {1.0, 0.0, 0.1}, alpha),
                    std::domain_error);
  }
}
