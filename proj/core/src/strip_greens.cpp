// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include "slitwave/strip_greens.hpp"

#include <cmath>
#include <numbers>

#include "slitwave/errors.hpp"

namespace slitwave {

namespace {

constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);

void check_omega(double omega) {
  if (!(omega > 0.0 && omega < kPi)) {
    throw DomainError("strip_greens: omega outside (0, pi)");
  }
}

// Evanescent decay rate of transverse mode k in a width-1 channel.
double decay_rate(int k, double omega) {
  return std::sqrt(static_cast<double>(k) * k * kPi * kPi - omega * omega);
}

std::complex<double> g_const_partial(double omega, long n) {
  double series = 0.0;
  // Summed backwards so the O(1/j^3) tail accumulates first.
  for (long j = n; j >= 1; --j) {
    const double s = decay_rate(static_cast<int>(2 * j), omega);
    series += 2.0 / s - 1.0 / (static_cast<double>(j) * kPi);
  }
  return kI / omega + series - std::log(2.0 * kPi) / kPi;
}

std::complex<double> gamma_self_partial(double omega, double p, long n) {
  const double ap = -p;  // |p|, p <= 0
  double series = 0.0;
  for (long k = n; k >= 1; --k) {
    const double s = decay_rate(static_cast<int>(k), omega);
    series += (1.0 + std::exp(-2.0 * s * ap)) / s -
              1.0 / (static_cast<double>(k) * kPi);
  }
  const std::complex<double> prop =
      kI * (1.0 + std::exp(2.0 * kI * omega * ap)) / (2.0 * omega);
  return prop + series - std::log(kPi) / kPi;
}

std::complex<double> gamma_cross(double omega, double p, double p_eval,
                                 long n) {
  const double d = std::abs(p_eval - p);        // distance to the source
  const double dd = std::abs(p_eval + p);       // distance to its wall image
  double series = 0.0;
  for (long k = n; k >= 1; --k) {
    const double s = decay_rate(static_cast<int>(k), omega);
    series += (std::exp(-s * d) + std::exp(-s * dd)) / s;
  }
  const std::complex<double> prop =
      kI * (std::exp(kI * omega * d) + std::exp(kI * omega * dd)) /
      (2.0 * omega);
  return prop + series;
}

}  // namespace

std::complex<double> compute_g_const(double omega, long n_terms) {
  check_omega(omega);
  if (n_terms < 100) throw DomainError("compute_g_const: n_terms < 100");
  const auto coarse = g_const_partial(omega, n_terms);
  const auto fine = g_const_partial(omega, 2 * n_terms);
  if (std::abs(fine - coarse) > 1e-8) {
    throw ConvergenceError("compute_g_const: series not settled at n_terms");
  }
  return fine;
}

std::complex<double> compute_gamma(double omega, double p, double p_eval,
                                   long n_terms) {
  check_omega(omega);
  if (n_terms < 100) throw DomainError("compute_gamma: n_terms < 100");
  if (p > 0.0 || p_eval > 0.0) {
    throw DomainError("compute_gamma: positions must satisfy p <= 0");
  }
  if (p_eval == p) {
    if (p == 0.0) {
      throw DomainError(
          "compute_gamma: no finite part at the wall corner p = 0 "
          "(source coincides with its image)");
    }
    const auto coarse = gamma_self_partial(omega, p, n_terms);
    const auto fine = gamma_self_partial(omega, p, 2 * n_terms);
    if (std::abs(fine - coarse) > 1e-8) {
      throw ConvergenceError("compute_gamma: series not settled at n_terms");
    }
    return fine;
  }
  const auto coarse = gamma_cross(omega, p, p_eval, n_terms);
  const auto fine = gamma_cross(omega, p, p_eval, 2 * n_terms);
  if (std::abs(fine - coarse) > 1e-8) {
    throw ConvergenceError("compute_gamma: series not settled at n_terms");
  }
  return fine;
}

std::complex<double> g_field_value(double omega, double x, double y,
                                   long n_terms) {
  check_omega(omega);
  if (!(y > 0.0) || std::abs(x) >= 0.5) {
    throw DomainError("g_field_value: point outside the open half-strip");
  }
  std::complex<double> value = -std::exp(kI * omega * y) / (kI * omega);
  for (long j = n_terms; j >= 1; --j) {
    const double s = decay_rate(static_cast<int>(2 * j), omega);
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    value += 2.0 * sign * std::cos(2.0 * j * kPi * (x + 0.5)) *
             std::exp(-s * y) / s;
  }
  return value;
}

std::complex<double> gamma_field_value(double omega, double p, double x,
                                       double y, long n_terms) {
  check_omega(omega);
  if (p > 0.0) throw DomainError("gamma_field_value: p must be <= 0");
  if (!(y > 0.0 && y <= 1.0)) {
    throw DomainError("gamma_field_value: point outside the trunk");
  }
  const double d1 = std::abs(x - p);
  const double d2 = std::abs(x + p);
  std::complex<double> value =
      kI * (std::exp(kI * omega * d1) + std::exp(kI * omega * d2)) /
      (2.0 * omega);
  for (long k = n_terms; k >= 1; --k) {
    const double s = decay_rate(static_cast<int>(k), omega);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    value += sign * std::cos(k * kPi * y) *
             (std::exp(-s * d1) + std::exp(-s * d2)) / s;
  }
  return value;
}

}  // namespace slitwave
