// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include "slitwave/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "slitwave/errors.hpp"

namespace slitwave {

namespace {
constexpr double kPi = std::numbers::pi;
}

void WaveguideConfig::validate() const {
  if (!(omega > 0.0 && omega < kPi)) {
    std::ostringstream msg;
    msg << "omega = " << omega
        << " outside (0, pi): a single propagating mode is required";
    throw DomainError(msg.str());
  }
  if (!(epsilon > 0.0)) {
    throw DomainError("epsilon must be positive");
  }
  if (p_plus == p_minus) {
    throw GeometryError("slit abscissae p_plus and p_minus coincide");
  }
  if (p_plus < p_minus) {
    throw GeometryError("p_plus must lie to the right of p_minus");
  }
  if (std::abs(p_plus - p_minus) <= epsilon) {
    throw GeometryError("slits overlap: |p_plus - p_minus| <= epsilon");
  }
  if (p_plus + epsilon / 2.0 > wall_x) {
    throw GeometryError("right slit overlaps the trunk end wall");
  }
  if (m_plus < 1 || m_minus < 1) {
    throw DomainError("resonance orders m_plus, m_minus must be >= 1");
  }
  // Slit lengths must stay positive for the chosen corrections.
  slit_length_plus();
  slit_length_minus();
}

double WaveguideConfig::base_length_plus() const {
  return resonant_length(omega, m_plus);
}

double WaveguideConfig::base_length_minus() const {
  return resonant_length(omega, m_minus);
}

double WaveguideConfig::slit_length_plus() const {
  return slit_length(base_length_plus(), Lp_plus, epsilon);
}

double WaveguideConfig::slit_length_minus() const {
  return slit_length(base_length_minus(), Lp_minus, epsilon);
}

std::array<double, 2> WaveguideConfig::top_plus() const {
  return {p_plus, 1.0 + slit_length_plus()};
}

std::array<double, 2> WaveguideConfig::top_minus() const {
  return {p_minus, 1.0 + slit_length_minus()};
}

double Segment::length() const {
  return std::abs(x1 - x0) + std::abs(y1 - y0);
}

double DomainDescription::total_area() const {
  double a = 0.0;
  for (const auto& r : rectangles) a += r.area();
  return a;
}

double resonant_length(double omega, int m) {
  if (!(omega > 0.0 && omega < kPi)) {
    throw DomainError("resonant_length: omega outside (0, pi)");
  }
  if (m < 1) {
    throw DomainError("resonant_length: m must be >= 1");
  }
  return kPi * static_cast<double>(m) / omega;
}

double slit_length(double L, double Lp, double epsilon) {
  if (!(L > 0.0)) throw DomainError("slit_length: base length must be positive");
  if (!(epsilon > 0.0)) throw DomainError("slit_length: epsilon must be positive");
  const double value = L + epsilon * Lp;
  if (!(value > 0.0)) {
    throw DomainError("slit_length: slit degenerates (L + epsilon*L' <= 0)");
  }
  return value;
}

double default_trunc_h(const WaveguideConfig& config) {
  return std::abs(config.p_minus - config.wall_x) + 2.0;
}

DomainDescription build_domain(const WaveguideConfig& config, double trunc_h,
                               double trunc_v) {
  config.validate();
  const double eps = config.epsilon;
  const double wall = config.wall_x;
  const double max_abs_p =
      std::max(std::abs(config.p_plus - wall), std::abs(config.p_minus - wall));
  if (trunc_h < max_abs_p + 2.0) {
    throw GeometryError("build_domain: trunc_h leaves less than the required "
                        "unit margin to the nearest slit");
  }
  if (trunc_v < 1.0) {
    throw GeometryError("build_domain: trunc_v must be >= 1");
  }

  const double Lp_eps = config.slit_length_plus();
  const double Lm_eps = config.slit_length_minus();

  DomainDescription dom;
  dom.rectangles = {
      {wall - trunc_h, wall, 0.0, 1.0, "trunk"},
      {config.p_minus - eps / 2.0, config.p_minus + eps / 2.0, 1.0,
       1.0 + Lm_eps, "slit_minus"},
      {config.p_plus - eps / 2.0, config.p_plus + eps / 2.0, 1.0, 1.0 + Lp_eps,
       "slit_plus"},
      {config.p_minus - 0.5, config.p_minus + 0.5, 1.0 + Lm_eps,
       1.0 + Lm_eps + trunc_v, "channel_minus"},
      {config.p_plus - 0.5, config.p_plus + 0.5, 1.0 + Lp_eps,
       1.0 + Lp_eps + trunc_v, "channel_plus"},
  };
  dom.truncation_faces = {
      {wall - trunc_h, 0.0, wall - trunc_h, 1.0, "sigma_0"},
      {config.p_minus - 0.5, 1.0 + Lm_eps + trunc_v, config.p_minus + 0.5,
       1.0 + Lm_eps + trunc_v, "sigma_minus"},
      {config.p_plus - 0.5, 1.0 + Lp_eps + trunc_v, config.p_plus + 0.5,
       1.0 + Lp_eps + trunc_v, "sigma_plus"},
  };
  dom.interface_segments = {
      {config.p_minus - eps / 2.0, 1.0, config.p_minus + eps / 2.0, 1.0,
       "mouth_minus"},
      {config.p_plus - eps / 2.0, 1.0, config.p_plus + eps / 2.0, 1.0,
       "mouth_plus"},
      {config.p_minus - eps / 2.0, 1.0 + Lm_eps, config.p_minus + eps / 2.0,
       1.0 + Lm_eps, "top_minus"},
      {config.p_plus - eps / 2.0, 1.0 + Lp_eps, config.p_plus + eps / 2.0,
       1.0 + Lp_eps, "top_plus"},
  };
  return dom;
}

}  // namespace slitwave
