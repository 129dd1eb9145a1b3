// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SLITWAVE_QUADRATURE_HPP
#define SLITWAVE_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace slitwave {

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Computes the n-point Gauss-Legendre rule (Newton iteration on P_n).
const GaussRule& gauss_legendre(int n);

// Integrates f over [a, b] with an n-point Gauss rule.
double integrate_gauss(const std::function<double(double)>& f, double a,
                       double b, int n);

// Tanh-sinh (double exponential) quadrature over (a, b); robust for
// integrable endpoint singularities.  `levels` doublings of the node
// density, starting from step h = 1.
double integrate_tanh_sinh(const std::function<double(double)>& f, double a,
                           double b, int levels = 10);

}  // namespace slitwave

#endif  // SLITWAVE_QUADRATURE_HPP
