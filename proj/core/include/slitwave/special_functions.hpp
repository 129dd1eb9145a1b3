// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SLITWAVE_SPECIAL_FUNCTIONS_HPP
#define SLITWAVE_SPECIAL_FUNCTIONS_HPP

#include <complex>

namespace slitwave {

// Sine integral Si(x) = int_0^x sin(t)/t dt.
double sine_integral(double x);

// Cosine integral Ci(x) = gamma + ln(x) + int_0^x (cos(t)-1)/t dt, x > 0.
double cosine_integral(double x);

// Exponential integral E1(z) for Re z >= 0, z != 0 (series for small |z|,
// modified Lentz continued fraction otherwise).
std::complex<double> exp_integral_e1(std::complex<double> z);

}  // namespace slitwave

#endif  // SLITWAVE_SPECIAL_FUNCTIONS_HPP
