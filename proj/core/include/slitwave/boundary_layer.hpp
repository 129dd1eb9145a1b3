// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SLITWAVE_BOUNDARY_LAYER_HPP
#define SLITWAVE_BOUNDARY_LAYER_HPP

namespace slitwave {

// Additive constant of the linearly growing harmonic function on the
// junction of a width-1 semi-strip with a half-plane (Neumann walls):
// Y(xi) = xi_y + C + O(e^{-pi xi_y}) up the strip, (1/pi) ln(1/|xi|) + O(1/|xi|)
// in the half-plane.  The problem is Laplace, so the constant does not
// depend on any wave number.
//
// Primary method: the aperture flux profile is matched between the strip
// cosine modes and the half-plane single-layer representation, Galerkin
// projected onto the cosine basis; the resulting dense systems are solved
// at increasing truncation orders and Richardson extrapolated.  Throws
// ConvergenceError when successive refinements disagree by more than
// `tolerance`.
double compute_c_xi(double tolerance);

// Independent oracle: direct biquadratic solve of the junction problem on
// a truncated geometry (half-plane box of half-width `box_w` and depth
// `box_w`, strip height `strip_h`), with the exact logarithmic far-field
// flux imposed on the truncation faces and the half-plane normalization
// recovered by face averaging.  Truncation error is O(1/box_w^2).
double compute_c_xi_truncated(double box_w = 12.0, double strip_h = 6.0,
                              double h_far = 0.10, double h_corner = 5e-4);

}  // namespace slitwave

#endif  // SLITWAVE_BOUNDARY_LAYER_HPP
