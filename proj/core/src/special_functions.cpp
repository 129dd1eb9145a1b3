// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include "slitwave/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "slitwave/errors.hpp"

namespace slitwave {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Power series valid for small |z|:
//   E1(z) = -gamma - ln z - sum_{k>=1} (-z)^k / (k * k!)
std::complex<double> e1_series(std::complex<double> z) {
  std::complex<double> sum = 0.0;
  std::complex<double> term = 1.0;
  for (int k = 1; k <= 60; ++k) {
    term *= -z / static_cast<double>(k);
    sum += term / static_cast<double>(k);
    if (std::abs(term) < 1e-18 * (std::abs(sum) + 1.0)) break;
  }
  return -kEulerGamma - std::log(z) - sum;
}

// Modified Lentz evaluation of the continued fraction
//   E1(z) = e^{-z} / (z + 1 - 1/(z + 3 - 4/(z + 5 - 9/(...))))
std::complex<double> e1_continued_fraction(std::complex<double> z) {
  const double tiny = 1e-300;
  std::complex<double> b = z + 1.0;
  std::complex<double> c = 1.0 / tiny;
  std::complex<double> d = 1.0 / b;
  std::complex<double> h = d;
  for (int k = 1; k <= 5000; ++k) {
    const double a = -static_cast<double>(k) * static_cast<double>(k);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const std::complex<double> delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) {
      return std::exp(-z) * h;
    }
  }
  throw ConvergenceError("exp_integral_e1: continued fraction stalled");
}

}  // namespace

std::complex<double> exp_integral_e1(std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0)) {
    throw DomainError("exp_integral_e1: z = 0");
  }
  if (std::abs(z) <= 3.0) return e1_series(z);
  return e1_continued_fraction(z);
}

// For x > 0:  E1(i x) = -Ci(x) + i (Si(x) - pi/2).
double sine_integral(double x) {
  if (x == 0.0) return 0.0;
  const double sign = x > 0.0 ? 1.0 : -1.0;
  const double ax = std::abs(x);
  const auto e1 = exp_integral_e1(std::complex<double>(0.0, ax));
  return sign * (std::numbers::pi / 2.0 + e1.imag());
}

double cosine_integral(double x) {
  if (!(x > 0.0)) throw DomainError("cosine_integral: requires x > 0");
  const auto e1 = exp_integral_e1(std::complex<double>(0.0, x));
  return -e1.real();
}

}  // namespace slitwave
