// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SLITWAVE_FIELD_IO_HPP
#define SLITWAVE_FIELD_IO_HPP

#include <string>

#include "slitwave/fem.hpp"

namespace slitwave {

// Plain-text structured-grid dump: per rectangle the extents and grid
// lines, then the nodal re/im values in lattice order (x fastest).
void write_field_text(const SolutionField& field, const std::string& path,
                      const std::string& run_id);

struct PixmapOptions {
  int width = 900;          // pixels across the bounding box
  bool colormap = false;    // false: 8-bit grayscale P5; true: P6
  bool real_part = false;   // plot Re(u) instead of |u|
};

// Portable pixmap of the field over the domain's bounding box with a
// geometry-accurate aspect ratio; pixels outside the domain are black.
// Values are scaled linearly to the field's maximum (a zero field maps to
// a uniform image).
void write_field_pixmap(const SolutionField& field, const std::string& path,
                        const PixmapOptions& options,
                        const std::string& run_id);

}  // namespace slitwave

#endif  // SLITWAVE_FIELD_IO_HPP
