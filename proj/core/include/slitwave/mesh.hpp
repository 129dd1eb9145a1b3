// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SLITWAVE_MESH_HPP
#define SLITWAVE_MESH_HPP

#include <array>
#include <vector>

#include "slitwave/geometry.hpp"

namespace slitwave {

enum class Side { left, right, bottom, top };

// Tensor grid of one rectangle with its biquadratic node lattice.
// `x_lines`/`y_lines` are the cell boundaries; nodes sit on the lines and
// on cell midpoints, so there are 2*(n_cells)+1 node coordinates per
// direction.  `node_ids` maps the local lattice (row-major, x fastest) to
// global node numbers; nodes on shared interfaces carry the same global id
// in both rectangles.
struct RectMesh {
  Rect rect;
  std::vector<double> x_lines;
  std::vector<double> y_lines;
  std::vector<double> x_nodes;
  std::vector<double> y_nodes;
  std::vector<int> node_ids;

  int nx_cells() const { return static_cast<int>(x_lines.size()) - 1; }
  int ny_cells() const { return static_cast<int>(y_lines.size()) - 1; }
  int nx_nodes() const { return static_cast<int>(x_nodes.size()); }
  int ny_nodes() const { return static_cast<int>(y_nodes.size()); }
  int node_id(int ix, int iy) const { return node_ids[ix + nx_nodes() * iy]; }
};

struct StructuredMesh {
  std::vector<RectMesh> rects;
  std::vector<std::array<double, 2>> node_coords;

  int n_nodes() const { return static_cast<int>(node_coords.size()); }
  int n_elements() const;
};

// Input for the generic mesh assembler: one rectangle with prescribed cell
// boundary lines.  Rectangles sharing an interface must list bitwise
// identical line coordinates along it.
struct RectGridSpec {
  Rect rect;
  std::vector<double> x_lines;
  std::vector<double> y_lines;
};

// Merges the per-rectangle lattices into one conforming global numbering.
StructuredMesh assemble_structured_mesh(const std::vector<RectGridSpec>& specs);

// Fills (a, b) with cell boundaries: cells of size ~h_a next to a grow
// geometrically up to h_interior and shrink back to h_b near b.
std::vector<double> graded_lines(double a, double b, double h_a,
                                 double h_interior, double h_b);

// Graded tensor mesh of the waveguide truncation.  Element size is h0 away
// from the slits and h0/refine_factor near slit mouths, tops, and across
// the slit width (at least 4 cells across).
StructuredMesh build_mesh(const DomainDescription& domain, double h0,
                          double refine_factor);

// Global node ids along one edge of a rectangle, ordered by increasing
// transverse coordinate; `coords` receives the transverse node positions.
std::vector<int> face_node_ids(const StructuredMesh& mesh, int rect_index,
                               Side side, std::vector<double>* coords = nullptr);

}  // namespace slitwave

#endif  // SLITWAVE_MESH_HPP
