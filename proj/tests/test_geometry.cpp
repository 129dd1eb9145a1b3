// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include "catch2/catch_amalgamated.hpp"
#include "slitwave/errors.hpp"
#include "slitwave/geometry.hpp"

using namespace slitwave;

namespace {
constexpr double kPi = std::numbers::pi;

WaveguideConfig reference_config() {
  WaveguideConfig config;
  config.omega = 0.8 * kPi;
  config.epsilon = 0.05;
  config.p_plus = -0.025;  // -eps/2 proxy for the corner position
  config.p_minus = -2.5;
  config.m_plus = 1;
  config.m_minus = 1;
  return config;
}
}  // namespace

TEST_CASE("resonant lengths", "[geometry]") {
  REQUIRE(resonant_length(0.8 * kPi, 1) == Catch::Approx(1.25).margin(1e-14));
  REQUIRE(resonant_length(kPi / 2.0, 2) == Catch::Approx(4.0).margin(1e-14));
  REQUIRE(resonant_length(0.8 * kPi, 2) == Catch::Approx(2.5).margin(1e-14));

  // L omega / pi recovers the integer order.
  for (double omega : {0.3 * kPi, 0.77 * kPi, 0.99 * kPi}) {
    for (int m : {1, 2, 7}) {
      const double ratio = resonant_length(omega, m) * omega / kPi;
      REQUIRE(std::abs(ratio - m) < 1e-12);
    }
  }

  REQUIRE_THROWS_AS(resonant_length(0.0, 1), DomainError);
  REQUIRE_THROWS_AS(resonant_length(kPi, 1), DomainError);
  REQUIRE_THROWS_AS(resonant_length(1.5 * kPi, 1), DomainError);
  REQUIRE_THROWS_AS(resonant_length(0.5 * kPi, 0), DomainError);
}

TEST_CASE("slit lengths", "[geometry]") {
  REQUIRE(slit_length(1.25, 0.0, 0.05) == 1.25);
  REQUIRE(slit_length(1.25, -2.0, 0.05) == Catch::Approx(1.15).margin(1e-14));
  REQUIRE_THROWS_AS(slit_length(1.25, -30.0, 0.05), DomainError);
  REQUIRE_THROWS_AS(slit_length(-1.0, 0.0, 0.05), DomainError);
  REQUIRE_THROWS_AS(slit_length(1.25, 0.0, 0.0), DomainError);
}

TEST_CASE("config validation", "[geometry]") {
  WaveguideConfig config = reference_config();
  REQUIRE_NOTHROW(config.validate());

  SECTION("multi-mode wave number") {
    config.omega = 1.5 * kPi;
    REQUIRE_THROWS_AS(config.validate(), DomainError);
  }
  SECTION("coincident slits") {
    config.p_plus = config.p_minus;
    REQUIRE_THROWS_AS(config.validate(), GeometryError);
  }
  SECTION("overlapping slits") {
    config.p_plus = config.p_minus + 0.04;
    REQUIRE_THROWS_AS(config.validate(), GeometryError);
  }
  SECTION("slit through the end wall") {
    config.p_plus = -0.01;
    REQUIRE_THROWS_AS(config.validate(), GeometryError);
  }
  SECTION("bad resonance order") {
    config.m_plus = 0;
    REQUIRE_THROWS_AS(config.validate(), DomainError);
  }
  SECTION("degenerate slit length") {
    config.Lp_minus = -1.25 / 0.05;
    REQUIRE_THROWS_AS(config.validate(), DomainError);
  }
}

TEST_CASE("domain decomposition of the reference setup", "[geometry]") {
  const WaveguideConfig config = reference_config();
  const double trunc_h = default_trunc_h(config);
  REQUIRE(trunc_h == Catch::Approx(4.5));
  const DomainDescription dom = build_domain(config, trunc_h, 2.0);

  REQUIRE(dom.rectangles.size() == 5);
  REQUIRE(dom.truncation_faces.size() == 3);
  REQUIRE(dom.interface_segments.size() == 4);

  // Interface segments are exactly eps wide.
  for (const auto& seg : dom.interface_segments) {
    REQUIRE(seg.length() == Catch::Approx(config.epsilon).margin(1e-15));
  }

  // The rectangles tile the truncated domain: area bookkeeping.
  const double expected =
      trunc_h * 1.0 +
      config.epsilon * (config.slit_length_plus() + config.slit_length_minus()) +
      2.0 * (1.0 * 2.0);
  REQUIRE(dom.total_area() == Catch::Approx(expected).margin(1e-12));

  // Truncation faces keep at least a unit margin from slit mouths/tops.
  const auto& sigma0 = dom.truncation_faces[0];
  REQUIRE(std::abs(sigma0.x0 - config.p_minus) >= 1.0);
  for (int i : {1, 2}) {
    const auto& face = dom.truncation_faces[i];
    const double top = 1.0 + (i == 1 ? config.slit_length_minus()
                                     : config.slit_length_plus());
    REQUIRE(face.y0 - top >= 1.0);
  }

  // Deterministic: a second build yields the identical decomposition.
  const DomainDescription again = build_domain(config, trunc_h, 2.0);
  for (size_t i = 0; i < dom.rectangles.size(); ++i) {
    REQUIRE(dom.rectangles[i].x0 == again.rectangles[i].x0);
    REQUIRE(dom.rectangles[i].x1 == again.rectangles[i].x1);
    REQUIRE(dom.rectangles[i].y0 == again.rectangles[i].y0);
    REQUIRE(dom.rectangles[i].y1 == again.rectangles[i].y1);
  }
}

TEST_CASE("domain build failures", "[geometry]") {
  WaveguideConfig config = reference_config();
  SECTION("degenerate single-slit request") {
    config.p_plus = config.p_minus;
    REQUIRE_THROWS_AS(build_domain(config, 4.5, 2.0), GeometryError);
  }
  SECTION("slit wider than the separation") {
    config.epsilon = 3.0;
    REQUIRE_THROWS_AS(build_domain(config, 6.0, 2.0), GeometryError);
  }
  SECTION("truncation too close") {
    REQUIRE_THROWS_AS(build_domain(config, 3.0, 2.0), GeometryError);
    REQUIRE_THROWS_AS(build_domain(config, 4.5, 0.5), GeometryError);
  }
}
