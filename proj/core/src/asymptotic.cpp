// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include "slitwave/asymptotic.hpp"

#include <cmath>
#include <numbers>

#include "slitwave/errors.hpp"

namespace slitwave {

namespace {

constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);

double parity_sign(int m) { return (m % 2 == 0) ? -1.0 : 1.0; }  // (-1)^{1+m}

void require_conversion_constants(const AuxConstants& aux) {
  if (!aux.gamma_plus_defined()) {
    throw DomainError(
        "length/beta conversion needs Gamma_+, undefined at p_plus = 0");
  }
}

void require_match(const WaveguideConfig& config, const AuxConstants& aux) {
  const double pp = config.p_plus - config.wall_x;
  const double pm = config.p_minus - config.wall_x;
  if (!aux.matches(config.omega, pp, pm)) {
    throw MismatchError(
        "aux constants were computed at different (omega, p_plus, p_minus)");
  }
}

}  // namespace

ScatteringTriple make_scattering_triple(std::complex<double> r,
                                        std::complex<double> t_plus,
                                        std::complex<double> t_minus) {
  ScatteringTriple triple;
  triple.r = r;
  triple.t_plus = t_plus;
  triple.t_minus = t_minus;
  triple.energy_residual = std::abs(1.0 - std::norm(r) - std::norm(t_plus) -
                                    std::norm(t_minus));
  return triple;
}

double ResonantMode::eigenvalue() const {
  return (kPi * m / length) * (kPi * m / length);
}

double ResonantMode::profile(double y) const {
  return std::sin(kPi * m * (y - 1.0) / length);
}

BetaPair beta_from_config(const WaveguideConfig& config,
                          const AuxConstants& aux) {
  config.validate();
  require_match(config, aux);
  require_conversion_constants(aux);
  const double log_term = 2.0 / kPi * std::abs(std::log(config.epsilon));
  const double common = log_term + 2.0 * aux.c_xi + aux.g_const.real();
  BetaPair beta;
  beta.plus =
      config.omega * (common + config.Lp_plus + aux.gamma_plus.real());
  beta.minus =
      config.omega * (common + config.Lp_minus + aux.gamma_minus.real());
  return beta;
}

std::pair<double, double> length_corrections_from_beta(
    const BetaPair& beta, const WaveguideConfig& config,
    const AuxConstants& aux) {
  require_match(config, aux);
  require_conversion_constants(aux);
  const double log_term = 2.0 / kPi * std::abs(std::log(config.epsilon));
  const double common = -log_term - 2.0 * aux.c_xi - aux.g_const.real();
  const double lp_plus =
      common + beta.plus / config.omega - aux.gamma_plus.real();
  const double lp_minus =
      common + beta.minus / config.omega - aux.gamma_minus.real();
  return {lp_plus, lp_minus};
}

std::pair<double, double> lengths_from_beta(const BetaPair& beta,
                                            const WaveguideConfig& config,
                                            const AuxConstants& aux) {
  const auto [lp_plus, lp_minus] =
      length_corrections_from_beta(beta, config, aux);
  const double L_plus = resonant_length(config.omega, config.m_plus) +
                        config.epsilon * lp_plus;
  const double L_minus = resonant_length(config.omega, config.m_minus) +
                         config.epsilon * lp_minus;
  if (!(L_plus > 0.0) || !(L_minus > 0.0)) {
    throw DomainError("lengths_from_beta: slit length degenerates");
  }
  return {L_plus, L_minus};
}

AmplitudePair solve_amplitudes(const BetaPair& beta, double omega,
                               double p_plus, double p_minus,
                               std::complex<double> gamma_tilde) {
  const double cp = std::cos(omega * p_plus);
  const double cm = std::cos(omega * p_minus);
  const std::complex<double> wg = omega * gamma_tilde;
  const std::complex<double> dp = beta.plus + kI * (1.0 + cp * cp);
  const std::complex<double> dm = beta.minus + kI * (1.0 + cm * cm);
  const std::complex<double> denom = dp * dm - wg * wg;

  const double scale = std::max({std::abs(dp) * std::abs(dm),
                                 std::abs(wg) * std::abs(wg), 1.0});
  if (std::abs(denom) < 1e-14 * scale) {
    throw SolveError("solve_amplitudes: amplitude system is singular");
  }

  AmplitudePair amps;
  amps.plus = (2.0 * cm * wg - 2.0 * dm * cp) / denom;
  amps.minus = (2.0 * cp * wg - 2.0 * dp * cm) / denom;

  // Row residuals of the linear system; fall back to direct elimination if
  // the closed form cancels badly.
  auto residual = [&](const AmplitudePair& a) {
    const std::complex<double> r1 = a.plus * dp + a.minus * wg + 2.0 * cp;
    const std::complex<double> r2 = a.minus * dm + a.plus * wg + 2.0 * cm;
    const double s1 = std::max({std::abs(a.plus * dp), std::abs(a.minus * wg),
                                2.0 * std::abs(cp), 1e-30});
    const double s2 = std::max({std::abs(a.minus * dm), std::abs(a.plus * wg),
                                2.0 * std::abs(cm), 1e-30});
    return std::max(std::abs(r1) / s1, std::abs(r2) / s2);
  };

  if (residual(amps) > 1e-12) {
    // 2x2 elimination with row pivoting.
    AmplitudePair elim;
    if (std::abs(dp) >= std::abs(wg)) {
      const std::complex<double> mult = wg / dp;
      const std::complex<double> d2 = dm - mult * wg;
      elim.minus = (-2.0 * cm + mult * 2.0 * cp) / d2;
      elim.plus = (-2.0 * cp - wg * elim.minus) / dp;
    } else {
      const std::complex<double> mult = dm / wg;
      const std::complex<double> d2 = wg - mult * dp;
      elim.plus = (-2.0 * cm + mult * 2.0 * cp) / d2;
      elim.minus = (-2.0 * cp - dp * elim.plus) / wg;
    }
    if (residual(elim) > 1e-10) {
      throw SolveError("solve_amplitudes: residual check failed");
    }
    return elim;
  }
  return amps;
}

ScatteringTriple scattering_first_order(const AmplitudePair& amps,
                                        double omega, double p_plus,
                                        double p_minus, int m_plus,
                                        int m_minus) {
  const double cp = std::cos(omega * p_plus);
  const double cm = std::cos(omega * p_minus);
  const std::complex<double> r =
      1.0 + kI * (amps.plus * cp + amps.minus * cm);
  const std::complex<double> t_plus = kI * parity_sign(m_plus) * amps.plus;
  const std::complex<double> t_minus = kI * parity_sign(m_minus) * amps.minus;
  return make_scattering_triple(r, t_plus, t_minus);
}

ScatteringTriple scattering_eta(const BetaPair& beta, double eta, int m_plus,
                                int m_minus) {
  const double bp = beta.plus;
  const double bm = beta.minus;
  const std::complex<double> denom =
      bp * bm - 3.0 - eta * eta + kI * (2.0 * (bp + bm) - 2.0 * eta);
  const std::complex<double> r =
      std::complex<double>(bp * bm + 1.0 - eta * eta, 2.0 * eta) / denom;
  const std::complex<double> t_plus =
      2.0 * kI * (-parity_sign(m_plus)) * (bm - eta + kI) / denom;
  const std::complex<double> t_minus =
      2.0 * kI * (-parity_sign(m_minus)) * (bp - eta + kI) / denom;
  return make_scattering_triple(r, t_plus, t_minus);
}

ScatteringTriple scattering_decoupled(const BetaPair& beta, int m_plus,
                                      int m_minus) {
  return scattering_eta(beta, 0.0, m_plus, m_minus);
}

BetaPair design_for_ratio(double target_ratio, bool negative_branch) {
  if (!(target_ratio > 0.0)) {
    throw DomainError("design_for_ratio: target ratio must be positive");
  }
  BetaPair beta;
  beta.plus = 1.0 / target_ratio;
  beta.minus = -target_ratio;
  if (negative_branch) {
    beta.plus = -beta.plus;
    beta.minus = -beta.minus;
  }
  return beta;
}

std::pair<double, double> slit_amplitude(const AmplitudePair& amps,
                                         double epsilon) {
  if (!(epsilon > 0.0)) throw DomainError("slit_amplitude: epsilon <= 0");
  return {std::abs(amps.plus) / epsilon, std::abs(amps.minus) / epsilon};
}

}  // namespace slitwave
