// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SLITWAVE_ASYMPTOTIC_HPP
#define SLITWAVE_ASYMPTOTIC_HPP

#include <complex>
#include <utility>

#include "slitwave/aux_constants.hpp"
#include "slitwave/geometry.hpp"

namespace slitwave {

// Dimensionless detuning parameters of the two slits; the design space of
// the leading-order model.
struct BetaPair {
  double plus = 0.0;
  double minus = 0.0;
};

// Resonance amplitudes a_pm of the leading-order slit fields
// eps^{-1} a_pm sin(omega(y-1)).
struct AmplitudePair {
  std::complex<double> plus;
  std::complex<double> minus;
};

// Reflection/transmission triple with its energy-balance diagnostic
// |1 - |R|^2 - |T_+|^2 - |T_-|^2|.
struct ScatteringTriple {
  std::complex<double> r;
  std::complex<double> t_plus;
  std::complex<double> t_minus;
  double energy_residual = 0.0;
};

ScatteringTriple make_scattering_triple(std::complex<double> r,
                                        std::complex<double> t_plus,
                                        std::complex<double> t_minus);

// Eigenpair of the 1D Dirichlet slit problem on (1, 1+L).
struct ResonantMode {
  int m = 1;
  double length = 0.0;

  double eigenvalue() const;          // (pi m / L)^2
  double profile(double y) const;     // sin(pi m (y-1) / L)
};

// beta_pm = omega (2/pi |ln eps| + L'_pm + 2 C_Xi + Re Gamma_pm + Re G).
BetaPair beta_from_config(const WaveguideConfig& config,
                          const AuxConstants& aux);

// Inverse map: slit lengths realizing the given detunings,
// L^eps_pm = pi m_pm/omega + eps (beta_pm/omega - 2/pi |ln eps| - 2 C_Xi
//           - Re Gamma_pm - Re G).
// Returns (L^eps_+, L^eps_-).
std::pair<double, double> lengths_from_beta(const BetaPair& beta,
                                            const WaveguideConfig& config,
                                            const AuxConstants& aux);

// Length corrections L'_pm for the given detunings (the epsilon-scaled
// deviation from resonance).
std::pair<double, double> length_corrections_from_beta(
    const BetaPair& beta, const WaveguideConfig& config,
    const AuxConstants& aux);

// Solves the 2x2 amplitude system
//   a_pm(beta_pm + i(1+cos^2(omega p_pm))) + a_mp omega Gamma~ = -2 cos(omega p_pm)
// by its closed form, asserting the row residuals; falls back to direct
// elimination near cancellation.
AmplitudePair solve_amplitudes(const BetaPair& beta, double omega,
                               double p_plus, double p_minus,
                               std::complex<double> gamma_tilde);

// Leading-order coefficients from the amplitudes:
//   R0    = 1 + i(a_+ cos(omega p_+) + a_- cos(omega p_-)),
//   T0_pm  = i (-1)^{1+m_pm} a_pm.
// The transmitted amplitude carries no position factor (the channel mode
// is constant across the slit top); with it the exact energy identity
// |R0|^2 + |T0_+|^2 + |T0_-|^2 = 1 holds for every admissible input.
ScatteringTriple scattering_first_order(const AmplitudePair& amps,
                                        double omega, double p_plus,
                                        double p_minus, int m_plus,
                                        int m_minus);

// Coupled first-order coefficients in the cos(omega p_pm) = 1 regime,
// parameterized by the coupling constant eta:
//   R0   = (b+b- + 1 - eta^2 + 2 i eta) / D,
//   T0_pm = 2 i (-1)^{m_pm} (b_mp + i - eta) / D,
//   D    = b+b- + 2i(b+ + b-) - 3 - eta^2 - 2 i eta.
ScatteringTriple scattering_eta(const BetaPair& beta, double eta, int m_plus,
                                int m_minus);

// Decoupled special case eta = 0.
ScatteringTriple scattering_decoupled(const BetaPair& beta, int m_plus,
                                      int m_minus);

// Detunings realizing |T0_+| / |T0_-| = target on the zero-reflection
// curve beta_+ beta_- = -1: returns (1/t, -t), or the mirrored branch
// (-1/t, t) when `negative_branch` is set.
BetaPair design_for_ratio(double target_ratio, bool negative_branch = false);

// Peak slit field magnitudes eps^{-1} |a_pm|.
std::pair<double, double> slit_amplitude(const AmplitudePair& amps,
                                         double epsilon);

}  // namespace slitwave

#endif  // SLITWAVE_ASYMPTOTIC_HPP
