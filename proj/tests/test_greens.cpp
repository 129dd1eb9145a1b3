// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "slitwave/errors.hpp"
#include "slitwave/strip_greens.hpp"

using namespace slitwave;

namespace {
constexpr double kPi = std::numbers::pi;
const std::vector<double> kOmegas = {0.3 * kPi, 0.5 * kPi, 0.8 * kPi};
const std::vector<double> kPositions = {-4.0, -2.5, -1.0, -0.025};

// Richardson/Neville extrapolation of f(r) -> f(0) over a halving ladder.
double extrapolate_to_zero(const std::vector<double>& radii,
                           const std::vector<double>& values) {
  std::vector<double> table = values;
  const size_t n = radii.size();
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = 0; i + level < n; ++i) {
      const double r0 = radii[i];
      const double r1 = radii[i + level];
      table[i] = (r0 * table[i + 1] - r1 * table[i]) / (r0 - r1);
    }
  }
  return table[0];
}
}  // namespace

TEST_CASE("half-strip constant: energy identity Im(wG) = 1", "[greens]") {
  for (double omega : kOmegas) {
    const auto G = compute_g_const(omega, 100000);
    REQUIRE(std::abs((omega * G).imag() - 1.0) < 1e-8);
  }
}

TEST_CASE("half-strip constant: refinement is a Cauchy sequence", "[greens]") {
  const double omega = 0.8 * kPi;
  double prev = compute_g_const(omega, 1000).real();
  double prev_step = 0.0;
  for (long n : {2000L, 4000L, 8000L, 16000L}) {
    const double cur = compute_g_const(omega, n).real();
    const double step = std::abs(cur - prev);
    // Monotone increasing partial sums, O(1/N)-or-better decrements.
    REQUIRE(cur >= prev);
    if (prev_step > 0.0) REQUIRE(step < prev_step);
    prev = cur;
    prev_step = step;
  }
  const double coarse = compute_g_const(omega, 100000).real();
  const double fine = compute_g_const(omega, 200000).real();
  REQUIRE(std::abs(coarse - fine) < 1e-8);
}

TEST_CASE("half-strip constant: small-radius field oracle", "[greens]") {
  // G = lim_{r->0} g(0, r) - (1/pi) ln(1/r), extrapolated from finite
  // radii; an independent route to the regularized series value.  The
  // local expansion also carries the Helmholtz term -(w^2/4pi) r^2 ln(1/r)
  // (from Delta u = -w^2 u acting on the log), removed before the
  // polynomial extrapolation.
  const double omega = 0.8 * kPi;
  const std::vector<double> radii = {0.16, 0.08, 0.04, 0.02, 0.01};
  std::vector<double> values_re, values_im;
  for (double r : radii) {
    const auto g = g_field_value(omega, 0.0, r, 400000);
    const double log_term = std::log(1.0 / r) / kPi;
    values_re.push_back(g.real() - log_term +
                        omega * omega / 4.0 * r * r * log_term);
    values_im.push_back(g.imag());
  }
  const auto G = compute_g_const(omega, 100000);
  REQUIRE(extrapolate_to_zero(radii, values_re) ==
          Catch::Approx(G.real()).margin(1e-6));
  REQUIRE(extrapolate_to_zero(radii, values_im) ==
          Catch::Approx(G.imag()).margin(1e-6));
}

TEST_CASE("trunk constants: lemma identities on the test grid", "[greens]") {
  for (double omega : kOmegas) {
    for (double p : kPositions) {
      const auto gamma = compute_gamma(omega, p, p, 100000);
      const double want = std::pow(std::cos(omega * p), 2);
      REQUIRE(std::abs((omega * gamma).imag() - want) < 1e-8);
    }
    for (double pp : kPositions) {
      for (double pm : kPositions) {
        if (pp == pm) continue;
        const auto tilde = compute_gamma(omega, pp, pm, 100000);
        const double want = std::cos(omega * pp) * std::cos(omega * pm);
        REQUIRE(std::abs((omega * tilde).imag() - want) < 1e-8);
      }
    }
  }
}

TEST_CASE("trunk constants: reference positions", "[greens]") {
  const double omega = 0.8 * kPi;
  // cos(0.8 pi * 2.5) = cos(2 pi) = 1.
  const auto gamma_minus = compute_gamma(omega, -2.5, -2.5, 100000);
  REQUIRE(std::abs((omega * gamma_minus).imag() - 1.0) < 1e-8);
  // Coupling constant with the right slit at the wall corner itself.
  const auto tilde = compute_gamma(omega, 0.0, -2.5, 100000);
  REQUIRE(std::abs((omega * tilde).imag() - 1.0) < 1e-8);
}

TEST_CASE("trunk constants: reciprocity", "[greens]") {
  for (double omega : kOmegas) {
    const auto ab = compute_gamma(omega, -3.1, -1.2, 100000);
    const auto ba = compute_gamma(omega, -1.2, -3.1, 100000);
    REQUIRE(std::abs(ab - ba) < 1e-10);
  }
}

TEST_CASE("trunk constants: small-radius field oracle", "[greens]") {
  const double omega = 0.5 * kPi;
  const double p = -1.7;
  const std::vector<double> radii = {0.16, 0.08, 0.04, 0.02, 0.01};
  std::vector<double> values;
  for (double r : radii) {
    // Approach the source along the wall y = 1; same r^2 ln correction as
    // in the half-strip oracle.
    const auto g = gamma_field_value(omega, p, p + r, 1.0, 400000);
    const double log_term = std::log(1.0 / r) / kPi;
    values.push_back(g.real() - log_term +
                     omega * omega / 4.0 * r * r * log_term);
  }
  const auto gamma = compute_gamma(omega, p, p, 100000);
  REQUIRE(extrapolate_to_zero(radii, values) ==
          Catch::Approx(gamma.real()).margin(1e-6));
}

TEST_CASE("greens error paths", "[greens]") {
  const double omega = 0.8 * kPi;
  REQUIRE_THROWS_AS(compute_g_const(1.2 * kPi, 100000), DomainError);
  REQUIRE_THROWS_AS(compute_g_const(omega, 50), DomainError);
  REQUIRE_THROWS_AS(compute_gamma(omega, 0.5, -1.0, 100000), DomainError);
  // No finite part when the source merges with its wall image.
  REQUIRE_THROWS_AS(compute_gamma(omega, 0.0, 0.0, 100000), DomainError);
  // Nearly coincident source and evaluation point: the plain series cannot
  // settle at this truncation.
  REQUIRE_THROWS_AS(compute_gamma(omega, -1.0, -1.0 + 1e-7, 200),
                    ConvergenceError);
}
