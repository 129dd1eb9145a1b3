// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include "slitwave/field_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <vector>

#include "slitwave/errors.hpp"
#include "slitwave/table_io.hpp"

namespace slitwave {

namespace {

// Blue-white-red diverging map for Re(u), dark-to-bright for |u|.
std::array<uint8_t, 3> color_of(double t, bool diverging) {
  t = std::clamp(t, diverging ? -1.0 : 0.0, 1.0);
  if (!diverging) {
    const double r = std::clamp(3.0 * t - 1.2, 0.0, 1.0);
    const double g = std::clamp(1.8 * t - 0.1, 0.0, 1.0) * 0.85;
    const double b = std::clamp(2.2 * t, 0.0, 1.0);
    return {static_cast<uint8_t>(255 * r), static_cast<uint8_t>(255 * g),
            static_cast<uint8_t>(255 * b)};
  }
  const double m = std::abs(t);
  if (t >= 0.0) {
    return {static_cast<uint8_t>(255), static_cast<uint8_t>(255 * (1 - m)),
            static_cast<uint8_t>(255 * (1 - m))};
  }
  return {static_cast<uint8_t>(255 * (1 - m)),
          static_cast<uint8_t>(255 * (1 - m)), static_cast<uint8_t>(255)};
}

}  // namespace

void write_field_text(const SolutionField& field, const std::string& path,
                      const std::string& run_id) {
  std::ofstream out(path);
  if (!out) throw Error("field file not writable: " + path);
  out << "# run: " << run_id << '\n';
  out << "rectangles " << field.mesh->rects.size() << '\n';
  for (const RectMesh& rm : field.mesh->rects) {
    out << "rect " << rm.rect.label << ' ' << format_double(rm.rect.x0) << ' '
        << format_double(rm.rect.x1) << ' ' << format_double(rm.rect.y0) << ' '
        << format_double(rm.rect.y1) << '\n';
    out << "xlines " << rm.x_lines.size();
    for (double v : rm.x_lines) out << ' ' << format_double(v);
    out << '\n';
    out << "ylines " << rm.y_lines.size();
    for (double v : rm.y_lines) out << ' ' << format_double(v);
    out << '\n';
    out << "values " << rm.nx_nodes() << ' ' << rm.ny_nodes() << '\n';
    for (int iy = 0; iy < rm.ny_nodes(); ++iy) {
      for (int ix = 0; ix < rm.nx_nodes(); ++ix) {
        const auto v = field.values[rm.node_id(ix, iy)];
        out << format_double(v.real()) << ' ' << format_double(v.imag());
        out << (ix + 1 == rm.nx_nodes() ? '\n' : ' ');
      }
    }
  }
}

void write_field_pixmap(const SolutionField& field, const std::string& path,
                        const PixmapOptions& options,
                        const std::string& run_id) {
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const RectMesh& rm : field.mesh->rects) {
    x0 = std::min(x0, rm.rect.x0);
    x1 = std::max(x1, rm.rect.x1);
    y0 = std::min(y0, rm.rect.y0);
    y1 = std::max(y1, rm.rect.y1);
  }
  const int width = std::max(16, options.width);
  const int height = std::max(
      16, static_cast<int>(std::lround(width * (y1 - y0) / (x1 - x0))));

  double peak = 0.0;
  for (int i = 0; i < field.values.size(); ++i) {
    peak = std::max(peak, std::abs(field.values[i]));
  }

  std::vector<uint8_t> pixels;
  pixels.reserve(static_cast<size_t>(width) * height *
                 (options.colormap ? 3 : 1));
  for (int row = 0; row < height; ++row) {
    // Image rows run top to bottom.
    const double y = y1 - (y1 - y0) * (row + 0.5) / height;
    for (int col = 0; col < width; ++col) {
      const double x = x0 + (x1 - x0) * (col + 0.5) / width;
      bool inside = false;
      for (const RectMesh& rm : field.mesh->rects) {
        if (rm.rect.contains(x, y)) {
          inside = true;
          break;
        }
      }
      double t = 0.0;
      if (inside && peak > 0.0) {
        const auto v = field.sample(x, y);
        t = options.real_part ? v.real() / peak : std::abs(v) / peak;
      }
      if (options.colormap) {
        const auto rgb =
            inside ? color_of(t, options.real_part)
                   : std::array<uint8_t, 3>{0, 0, 0};
        pixels.push_back(rgb[0]);
        pixels.push_back(rgb[1]);
        pixels.push_back(rgb[2]);
      } else {
        const double g = options.real_part ? 0.5 * (t + 1.0) : t;
        pixels.push_back(
            inside ? static_cast<uint8_t>(std::lround(255.0 * g)) : 0);
      }
    }
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("pixmap not writable: " + path);
  out << (options.colormap ? "P6" : "P5") << '\n'
      << "# run: " << run_id << '\n'
      << width << ' ' << height << '\n'
      << 255 << '\n';
  out.write(reinterpret_cast<const char*>(pixels.data()),
            static_cast<std::streamsize>(pixels.size()));
}

}  // namespace slitwave
