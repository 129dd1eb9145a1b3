// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SLITWAVE_GEOMETRY_HPP
#define SLITWAVE_GEOMETRY_HPP

#include <array>
#include <string>
#include <vector>

namespace slitwave {

// Physical and geometric parameters of the three-channel slit waveguide.
//
// The trunk occupies (-inf; wall_x) x (0; 1); two slits of width epsilon
// open at abscissae p_minus < p_plus on the top boundary y = 1 and connect
// to vertical half-channels of width 1.  Base slit lengths are always the
// resonance lengths pi*m/omega; the stored corrections Lp_* are the
// O(epsilon) length perturbations L' of the design.
struct WaveguideConfig {
  double omega = 0.0;    // wave number, must lie in (0, pi)
  double epsilon = 0.0;  // slit width
  double p_plus = 0.0;   // abscissa of the right slit
  double p_minus = 0.0;  // abscissa of the left slit
  int m_plus = 1;        // resonance order of the right slit
  int m_minus = 1;       // resonance order of the left slit
  double Lp_plus = 0.0;  // length correction L'_+
  double Lp_minus = 0.0; // length correction L'_-
  double wall_x = 0.0;   // abscissa of the right trunk wall

  // Throws DomainError/GeometryError naming the violated invariant.
  void validate() const;

  // Base resonance lengths L_pm = pi m / omega.
  double base_length_plus() const;
  double base_length_minus() const;

  // True slit lengths L + epsilon L'.
  double slit_length_plus() const;
  double slit_length_minus() const;

  // Slit mouth centers A_pm = (p_pm, 1).
  std::array<double, 2> mouth_plus() const { return {p_plus, 1.0}; }
  std::array<double, 2> mouth_minus() const { return {p_minus, 1.0}; }

  // Slit top centers B_pm = (p_pm, 1 + L^eps_pm).
  std::array<double, 2> top_plus() const;
  std::array<double, 2> top_minus() const;
};

// Axis-aligned rectangle [x0, x1] x [y0, y1].
struct Rect {
  double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
  std::string label;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return width() * height(); }
  bool contains(double x, double y) const {
    return x >= x0 && x <= x1 && y >= y0 && y <= y1;
  }
};

// A straight axis-parallel segment (truncation face or interface).
struct Segment {
  // Horizontal segments: y0 == y1; vertical: x0 == x1.
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
  std::string label;

  double length() const;
  bool vertical() const { return x0 == x1; }
};

// Truncated decomposition of the waveguide into its five rectangles.
//
// Indices into `rectangles`: 0 = trunk, 1 = left slit, 2 = right slit,
// 3 = left channel, 4 = right channel.  `truncation_faces` holds the
// artificial cross-sections in order Sigma_0, Sigma_-, Sigma_+.
struct DomainDescription {
  std::vector<Rect> rectangles;
  std::vector<Segment> truncation_faces;
  std::vector<Segment> interface_segments;  // 2 mouths then 2 slit tops

  double total_area() const;
};

// Resonance length L = pi m / omega of the 1D slit problem.
double resonant_length(double omega, int m);

// True slit length L^eps = L + epsilon * Lp.
double slit_length(double L, double Lp, double epsilon);

// Builds the 5-rectangle truncation of the waveguide.  Sigma_0 is placed
// at x = -trunc_h, the channel faces Sigma_pm at distance trunc_v above the
// slit tops.
DomainDescription build_domain(const WaveguideConfig& config, double trunc_h,
                               double trunc_v);

// Default truncation distances (evanescent contamination < 1e-5 at the
// design wave numbers).
double default_trunc_h(const WaveguideConfig& config);
inline double default_trunc_v() { return 2.0; }

}  // namespace slitwave

#endif  // SLITWAVE_GEOMETRY_HPP
