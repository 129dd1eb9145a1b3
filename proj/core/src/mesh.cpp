// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include "slitwave/mesh.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <utility>

#include "slitwave/errors.hpp"

namespace slitwave {

namespace {

constexpr double kGrowthRatio = 1.35;

std::vector<double> nodes_from_lines(const std::vector<double>& lines) {
  std::vector<double> nodes;
  nodes.reserve(2 * lines.size() - 1);
  for (size_t i = 0; i + 1 < lines.size(); ++i) {
    nodes.push_back(lines[i]);
    nodes.push_back(0.5 * (lines[i] + lines[i + 1]));
  }
  nodes.push_back(lines.back());
  return nodes;
}

uint64_t key_bits(double v) {
  // Collapse -0.0 onto 0.0 so interface keys are unambiguous.
  if (v == 0.0) v = 0.0;
  return std::bit_cast<uint64_t>(v);
}

// Geometric size ladder from h_start up to h_cap, covering at most `span`.
std::vector<double> size_ladder(double h_start, double h_cap, double span) {
  std::vector<double> sizes;
  double h = h_start;
  double used = 0.0;
  while (h < h_cap && used + h < span) {
    sizes.push_back(h);
    used += h;
    h *= kGrowthRatio;
  }
  return sizes;
}

}  // namespace

int StructuredMesh::n_elements() const {
  int count = 0;
  for (const auto& r : rects) count += r.nx_cells() * r.ny_cells();
  return count;
}

std::vector<double> graded_lines(double a, double b, double h_a,
                                 double h_interior, double h_b) {
  const double span = b - a;
  if (!(span > 0.0)) throw MeshError("graded_lines: empty interval");
  if (!(h_a > 0.0 && h_b > 0.0 && h_interior > 0.0)) {
    throw MeshError("graded_lines: nonpositive target size");
  }

  // Build a size sequence: ladder up from a, ladder up from b, uniform fill
  // in between, then scale everything to fit the interval exactly.
  std::vector<double> left = size_ladder(h_a, h_interior, span / 2.0);
  std::vector<double> right = size_ladder(h_b, h_interior, span / 2.0);
  double used = 0.0;
  for (double s : left) used += s;
  for (double s : right) used += s;
  const double middle = span - used;
  const int n_mid = std::max(1, static_cast<int>(std::ceil(middle / h_interior)));

  std::vector<double> sizes;
  sizes.reserve(left.size() + right.size() + n_mid);
  sizes.insert(sizes.end(), left.begin(), left.end());
  for (int i = 0; i < n_mid; ++i) sizes.push_back(middle / n_mid);
  sizes.insert(sizes.end(), right.rbegin(), right.rend());

  double total = 0.0;
  for (double s : sizes) total += s;
  const double scale = span / total;

  std::vector<double> lines;
  lines.reserve(sizes.size() + 1);
  lines.push_back(a);
  double pos = a;
  for (size_t i = 0; i + 1 < sizes.size(); ++i) {
    pos += sizes[i] * scale;
    lines.push_back(pos);
  }
  lines.push_back(b);
  return lines;
}

StructuredMesh assemble_structured_mesh(
    const std::vector<RectGridSpec>& specs) {
  StructuredMesh mesh;
  std::map<std::pair<uint64_t, uint64_t>, int> ids;

  for (const auto& spec : specs) {
    if (spec.x_lines.size() < 2 || spec.y_lines.size() < 2) {
      throw MeshError("assemble_structured_mesh: rectangle without cells");
    }
    if (!std::is_sorted(spec.x_lines.begin(), spec.x_lines.end()) ||
        !std::is_sorted(spec.y_lines.begin(), spec.y_lines.end())) {
      throw MeshError("assemble_structured_mesh: unsorted grid lines");
    }
    RectMesh rm;
    rm.rect = spec.rect;
    rm.x_lines = spec.x_lines;
    rm.y_lines = spec.y_lines;
    rm.x_nodes = nodes_from_lines(spec.x_lines);
    rm.y_nodes = nodes_from_lines(spec.y_lines);
    rm.node_ids.resize(rm.x_nodes.size() * rm.y_nodes.size());
    for (int iy = 0; iy < rm.ny_nodes(); ++iy) {
      for (int ix = 0; ix < rm.nx_nodes(); ++ix) {
        const double x = rm.x_nodes[ix];
        const double y = rm.y_nodes[iy];
        const auto key = std::make_pair(key_bits(x), key_bits(y));
        auto it = ids.find(key);
        int id;
        if (it == ids.end()) {
          id = static_cast<int>(mesh.node_coords.size());
          ids.emplace(key, id);
          mesh.node_coords.push_back({x, y});
        } else {
          id = it->second;
        }
        rm.node_ids[ix + rm.nx_nodes() * iy] = id;
      }
    }
    mesh.rects.push_back(std::move(rm));
  }
  return mesh;
}

StructuredMesh build_mesh(const DomainDescription& domain, double h0,
                          double refine_factor) {
  if (!(h0 > 0.0 && h0 <= 0.1)) {
    throw MeshError("build_mesh: h0 must lie in (0, 0.1]");
  }
  if (!(refine_factor >= 1.0)) {
    throw MeshError("build_mesh: refine_factor must be >= 1");
  }
  if (domain.rectangles.size() != 5) {
    throw MeshError("build_mesh: expected the 5-rectangle decomposition");
  }
  for (const auto& r : domain.rectangles) {
    if (!(r.width() > 0.0 && r.height() > 0.0)) {
      throw MeshError("build_mesh: degenerate rectangle '" + r.label + "'");
    }
  }

  const double h_fine = h0 / refine_factor;
  // The slit-edge corners carry the r^{2/3} field singularity; geometric
  // layers down to h_corner keep the scattering coefficients at the smooth
  // convergence rate of the interior mesh.
  const double h_corner = h_fine / 16.0;
  const Rect& trunk = domain.rectangles[0];
  const Rect& slit_m = domain.rectangles[1];
  const Rect& slit_p = domain.rectangles[2];
  const Rect& chan_m = domain.rectangles[3];
  const Rect& chan_p = domain.rectangles[4];
  const double eps = slit_m.width();

  // Canonical transverse subdivision of each slit, shared by every
  // rectangle that touches it: corner-graded, cells never wider than
  // eps/4, at least 4 across.
  const double h_slit_cap = std::min(h_fine, eps / 4.0);
  auto slit_x_lines = [&](const Rect& slit) {
    std::vector<double> lines =
        graded_lines(slit.x0, slit.x1, h_corner, h_slit_cap, h_corner);
    if (static_cast<int>(lines.size()) - 1 < 4) {
      throw MeshError("build_mesh: slit resolved by fewer than 4 cells");
    }
    return lines;
  };
  const std::vector<double> xm = slit_x_lines(slit_m);
  const std::vector<double> xp = slit_x_lines(slit_p);

  auto append_interior = [](std::vector<double>* dst,
                            const std::vector<double>& lines) {
    dst->insert(dst->end(), lines.begin() + 1, lines.end() - 1);
  };

  // Trunk x lines: graded spans between wall/truncation and the slit
  // columns, with the canonical slit lines spliced in exactly.
  std::vector<double> trunk_x;
  {
    auto left = graded_lines(trunk.x0, slit_m.x0, h0, h0, h_corner);
    auto mid = graded_lines(slit_m.x1, slit_p.x0, h_corner, h0, h_corner);
    trunk_x = left;
    append_interior(&trunk_x, xm);
    trunk_x.push_back(slit_m.x1);
    trunk_x.insert(trunk_x.end(), mid.begin() + 1, mid.end());
    append_interior(&trunk_x, xp);
    trunk_x.push_back(slit_p.x1);
    if (slit_p.x1 < trunk.x1) {
      auto right = graded_lines(slit_p.x1, trunk.x1, h_corner, h0, h0);
      trunk_x.insert(trunk_x.end(), right.begin() + 1, right.end());
    }
  }
  const std::vector<double> trunk_y = graded_lines(0.0, 1.0, h0, h0, h_corner);

  // Slit rectangles: corner layers at mouth and top, h0 cap in the middle.
  auto slit_y_lines = [&](const Rect& slit) {
    return graded_lines(slit.y0, slit.y1, h_corner, h0, h_corner);
  };

  // Channels: the slit lines continue into the channel floor.
  auto channel_x_lines = [&](const Rect& chan, const Rect& slit,
                             const std::vector<double>& slit_lines) {
    std::vector<double> lines =
        graded_lines(chan.x0, slit.x0, h0, h0, h_corner);
    append_interior(&lines, slit_lines);
    lines.push_back(slit.x1);
    auto right = graded_lines(slit.x1, chan.x1, h_corner, h0, h0);
    lines.insert(lines.end(), right.begin() + 1, right.end());
    return lines;
  };
  auto channel_y_lines = [&](const Rect& chan) {
    return graded_lines(chan.y0, chan.y1, h_corner, h0, h0);
  };

  std::vector<RectGridSpec> specs(5);
  specs[0] = {trunk, trunk_x, trunk_y};
  specs[1] = {slit_m, xm, slit_y_lines(slit_m)};
  specs[2] = {slit_p, xp, slit_y_lines(slit_p)};
  specs[3] = {chan_m, channel_x_lines(chan_m, slit_m, xm),
              channel_y_lines(chan_m)};
  specs[4] = {chan_p, channel_x_lines(chan_p, slit_p, xp),
              channel_y_lines(chan_p)};
  return assemble_structured_mesh(specs);
}

std::vector<int> face_node_ids(const StructuredMesh& mesh, int rect_index,
                               Side side, std::vector<double>* coords) {
  const RectMesh& rm = mesh.rects.at(rect_index);
  std::vector<int> ids;
  if (coords != nullptr) coords->clear();
  const int nx = rm.nx_nodes();
  const int ny = rm.ny_nodes();
  switch (side) {
    case Side::left:
    case Side::right: {
      const int ix = (side == Side::left) ? 0 : nx - 1;
      for (int iy = 0; iy < ny; ++iy) {
        ids.push_back(rm.node_id(ix, iy));
        if (coords != nullptr) coords->push_back(rm.y_nodes[iy]);
      }
      break;
    }
    case Side::bottom:
    case Side::top: {
      const int iy = (side == Side::bottom) ? 0 : ny - 1;
      for (int ix = 0; ix < nx; ++ix) {
        ids.push_back(rm.node_id(ix, iy));
        if (coords != nullptr) coords->push_back(rm.x_nodes[ix]);
      }
      break;
    }
  }
  return ids;
}

}  // namespace slitwave
