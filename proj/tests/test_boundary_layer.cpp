// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <type_traits>

#include "catch2/catch_amalgamated.hpp"
#include "slitwave/boundary_layer.hpp"
#include "slitwave/errors.hpp"

using namespace slitwave;

// The junction problem is Laplace, not Helmholtz: the constant takes no
// wave number anywhere in its interface.
static_assert(std::is_invocable_r_v<double, decltype(&compute_c_xi), double>);

TEST_CASE("junction constant: refinement consistency", "[cxi]") {
  const double coarse = compute_c_xi(1e-4);
  const double fine = compute_c_xi(1e-6);
  REQUIRE(std::isfinite(fine));
  REQUIRE(std::abs(coarse - fine) < 1e-4);
  // The aperture admittance shortens the effective duct, so the constant
  // is a positive end correction smaller than the half width.
  REQUIRE(fine > 0.0);
  REQUIRE(fine < 0.5);
}

TEST_CASE("junction constant: mode matching vs truncated-domain solve",
          "[cxi]") {
  // Dual-route check: the aperture Galerkin value against an independent
  // direct discretization of the junction problem.
  const double matched = compute_c_xi(1e-6);
  const double truncated = compute_c_xi_truncated(9.0, 5.0, 0.12, 1e-3);
  REQUIRE(std::abs(matched - truncated) < 1e-4);
}

TEST_CASE("junction constant: truncation stability of the oracle", "[cxi]") {
  const double near = compute_c_xi_truncated(6.0, 5.0, 0.12, 1e-3);
  const double far = compute_c_xi_truncated(9.0, 5.0, 0.12, 1e-3);
  REQUIRE(std::abs(near - far) < 2e-5);
}

TEST_CASE("junction constant: error paths", "[cxi]") {
  REQUIRE_THROWS_AS(compute_c_xi(0.0), DomainError);
  REQUIRE_THROWS_AS(compute_c_xi(-1e-6), DomainError);
  REQUIRE_THROWS_AS(compute_c_xi_truncated(2.0, 5.0), DomainError);
}
