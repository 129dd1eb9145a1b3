// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SLITWAVE_STRIP_GREENS_HPP
#define SLITWAVE_STRIP_GREENS_HPP

#include <complex>

namespace slitwave {

// Modal-series constants of the two outgoing Green's functions of the
// analysis: g on the half-strip (-1/2,1/2) x (0,inf) with a boundary flux
// point source at the origin, and gamma_p on the half-infinite trunk
// (-inf,0) x (0,1) with a boundary flux point source at (p, 1).
//
// Both functions behave like (1/pi) ln(1/r) near their source; the
// "constant" is the finite part of that expansion.  The self-evaluation
// series diverge logarithmically term by term; the known 1/(k pi) large-k
// asymptote is subtracted and its closed-form limit added back, which
// turns the partial sums into a monotone sequence with O(1/N^2) tails.

// G = lim_{r->0} (g - (1/pi) ln(1/r)) at the source.  Requires
// 0 < omega < pi and n_terms >= 100; throws ConvergenceError if doubling
// n_terms still moves the result by more than 1e-8.
std::complex<double> compute_g_const(double omega, long n_terms = 100000);

// For p_eval == p returns the regularized constant Gamma_p; otherwise the
// plain value gamma_p(p_eval, 1) (finite, used for the coupling constant).
// Positions are relative to the trunk end wall and must be <= 0.  The
// self-evaluation at p == 0 has no finite part (the source merges with its
// wall image) and is rejected.
std::complex<double> compute_gamma(double omega, double p, double p_eval,
                                   long n_terms = 100000);

// Point values of the two Green's functions away from the source, by plain
// modal summation (no regularization).  Used as independent small-radius
// oracles for the constants above.
std::complex<double> g_field_value(double omega, double x, double y,
                                   long n_terms = 100000);
std::complex<double> gamma_field_value(double omega, double p, double x,
                                       double y, long n_terms = 100000);

}  // namespace slitwave

#endif  // SLITWAVE_STRIP_GREENS_HPP
