// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "catch2/catch_amalgamated.hpp"
#include "slitwave/errors.hpp"
#include "slitwave/mesh.hpp"

using namespace slitwave;

namespace {
constexpr double kPi = std::numbers::pi;

WaveguideConfig reference_config() {
  WaveguideConfig config;
  config.omega = 0.8 * kPi;
  config.epsilon = 0.05;
  config.p_plus = -0.025;
  config.p_minus = -2.5;
  return config;
}
}  // namespace

TEST_CASE("graded lines partition the interval", "[mesh]") {
  const auto lines = graded_lines(-2.0, 3.0, 0.01, 0.2, 0.05);
  REQUIRE(lines.front() == -2.0);
  REQUIRE(lines.back() == 3.0);
  REQUIRE(std::is_sorted(lines.begin(), lines.end()));
  // First/last cells near their target sizes; nothing wildly oversized.
  REQUIRE(lines[1] - lines[0] < 0.02);
  REQUIRE(lines.back() - lines[lines.size() - 2] < 0.1);
  for (size_t i = 0; i + 1 < lines.size(); ++i) {
    REQUIRE(lines[i + 1] - lines[i] <= 0.2 * 1.5);
  }
  REQUIRE_THROWS_AS(graded_lines(1.0, 1.0, 0.1, 0.1, 0.1), MeshError);
}

TEST_CASE("waveguide mesh: conforming slit refinement", "[mesh]") {
  const WaveguideConfig config = reference_config();
  const DomainDescription dom = build_domain(config, 4.5, 2.0);
  const StructuredMesh mesh = build_mesh(dom, 0.05, 4.0);

  REQUIRE(mesh.rects.size() == 5);
  REQUIRE(mesh.n_elements() > 0);

  const RectMesh& trunk = mesh.rects[0];
  const RectMesh& slit_m = mesh.rects[1];
  const RectMesh& slit_p = mesh.rects[2];

  // Slit edge coordinates appear exactly among the trunk lines.
  for (double edge : {config.p_minus - 0.025, config.p_minus + 0.025,
                      config.p_plus - 0.025, config.p_plus + 0.025}) {
    REQUIRE(std::find(trunk.x_lines.begin(), trunk.x_lines.end(), edge) !=
            trunk.x_lines.end());
  }

  // At least 4 cells across each slit, each no wider than eps/4.
  for (const RectMesh* slit : {&slit_m, &slit_p}) {
    REQUIRE(slit->nx_cells() >= 4);
    for (int i = 0; i < slit->nx_cells(); ++i) {
      REQUIRE(slit->x_lines[i + 1] - slit->x_lines[i] <=
              config.epsilon / 4.0 + 1e-15);
    }
  }

  // Interface nodes are shared: every node on a slit's bottom edge also
  // belongs to the trunk lattice, with identical coordinates.
  std::map<int, int> occurrences;
  for (const RectMesh& rm : mesh.rects) {
    for (int id : rm.node_ids) ++occurrences[id];
  }
  for (const RectMesh* slit : {&slit_m, &slit_p}) {
    const auto bottom = face_node_ids(mesh, slit == &slit_m ? 1 : 2,
                                      Side::bottom);
    for (int id : bottom) {
      REQUIRE(occurrences[id] >= 2);
      REQUIRE(mesh.node_coords[id][1] == 1.0);
    }
    const auto top = face_node_ids(mesh, slit == &slit_m ? 1 : 2, Side::top);
    for (int id : top) REQUIRE(occurrences[id] >= 2);
  }

  // Deterministic rebuild.
  const StructuredMesh again = build_mesh(dom, 0.05, 4.0);
  REQUIRE(again.n_nodes() == mesh.n_nodes());
  REQUIRE(again.rects[0].x_lines == mesh.rects[0].x_lines);
  REQUIRE(again.rects[4].y_lines == mesh.rects[4].y_lines);
}

TEST_CASE("mesh grows like the area under refinement", "[mesh]") {
  // Halving h0 quadruples the uniform-region cell count; the logarithmic
  // corner ladders dilute the global factor to somewhere in (2, 8).
  const DomainDescription dom = build_domain(reference_config(), 4.5, 2.0);
  const int coarse = build_mesh(dom, 0.08, 2.0).n_elements();
  const int fine = build_mesh(dom, 0.04, 2.0).n_elements();
  REQUIRE(fine > 2 * coarse);
  REQUIRE(fine < 8 * coarse);
}

TEST_CASE("mesh error paths", "[mesh]") {
  const DomainDescription dom = build_domain(reference_config(), 4.5, 2.0);
  REQUIRE_THROWS_AS(build_mesh(dom, 0.2, 4.0), MeshError);
  REQUIRE_THROWS_AS(build_mesh(dom, 0.05, 0.5), MeshError);

  DomainDescription broken = dom;
  broken.rectangles[1].y1 = broken.rectangles[1].y0;  // degenerate slit
  REQUIRE_THROWS_AS(build_mesh(broken, 0.05, 4.0), MeshError);

  DomainDescription wrong = dom;
  wrong.rectangles.pop_back();
  REQUIRE_THROWS_AS(build_mesh(wrong, 0.05, 4.0), MeshError);
}

TEST_CASE("face node extraction", "[mesh]") {
  std::vector<RectGridSpec> specs(1);
  specs[0] = {{0.0, 1.0, 0.0, 2.0, "box"},
              {0.0, 0.5, 1.0},
              {0.0, 1.0, 2.0}};
  const StructuredMesh mesh = assemble_structured_mesh(specs);
  std::vector<double> coords;
  const auto left = face_node_ids(mesh, 0, Side::left, &coords);
  REQUIRE(left.size() == 5);
  REQUIRE(coords.front() == 0.0);
  REQUIRE(coords.back() == 2.0);
  const auto top = face_node_ids(mesh, 0, Side::top, &coords);
  REQUIRE(top.size() == 5);
  REQUIRE(coords == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
}
