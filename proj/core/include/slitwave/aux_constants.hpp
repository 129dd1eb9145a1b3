// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SLITWAVE_AUX_CONSTANTS_HPP
#define SLITWAVE_AUX_CONSTANTS_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace slitwave {

struct WaveguideConfig;

// The five epsilon-independent constants of the asymptotic analysis,
// together with the parameters they were computed at.  Positions are
// relative to the trunk end wall (p <= 0).
//
// Built-in identities (checked by the test suite):
//   imag(c_xi) = 0 by construction,
//   imag(omega * g_const)     = 1,
//   imag(omega * gamma_pm)     = cos^2(omega p_pm),
//   imag(omega * gamma_tilde) = cos(omega p_+) cos(omega p_-).
struct AuxConstants {
  double omega = 0.0;
  double p_plus = 0.0;
  double p_minus = 0.0;
  double c_xi = 0.0;
  std::complex<double> g_const;
  std::complex<double> gamma_plus;   // NaN when p_plus sits on the corner
  std::complex<double> gamma_minus;
  std::complex<double> gamma_tilde;
  double tolerance = 0.0;

  bool gamma_plus_defined() const;
  bool matches(double omega_, double p_plus_, double p_minus_,
               double tol = 1e-12) const;
};

// Far-field data of the trunk Green's functions: the propagating-mode
// amplitudes s_pm = i cos(omega p_pm)/omega and the coupling measure
// eta = Re(omega gamma_tilde).
struct FarFieldAmplitudes {
  std::complex<double> s_plus;
  std::complex<double> s_minus;
  double eta = 0.0;
};

// Computes the full constant bundle at the given
// (omega, p_plus, p_minus).  When p_plus == 0 the self constant
// gamma_plus has no finite part and is stored as NaN; everything else is
// still valid (the coupling constant in particular).
AuxConstants compute_aux_constants(double omega, double p_plus,
                                   double p_minus, double tolerance = 1e-6,
                                   long n_terms = 100000);

FarFieldAmplitudes far_field_amplitudes(const AuxConstants& aux);

// eta = Re(omega gamma_tilde) under the design normalization
// cos(omega p_pm) = 1; throws RegimeError when |cos(omega p_pm) - 1| > 1e-9.
double coupling_eta(const AuxConstants& aux);

// Append-only on-disk cache of constant bundles, keyed by
// (omega, p_plus, p_minus, tolerance).  One text record per line:
//   omega p_plus p_minus c_xi g_re g_im gp_re gp_im gm_re gm_im gt_re gt_im tolerance
// Readers may share the cache concurrently; writes are serialized.
class ConstantsCache {
public:
  // Default path: $SLITWAVE_CACHE_DIR/constants.cache if the environment
  // variable is set, otherwise ./slitwave_constants.cache.
  ConstantsCache();
  explicit ConstantsCache(std::string path);

  // Returns the cached bundle or computes and appends it.
  AuxConstants get(double omega, double p_plus, double p_minus,
                   double tolerance = 1e-6, long n_terms = 100000);

  std::optional<AuxConstants> lookup(double omega, double p_plus,
                                     double p_minus, double tolerance) const;
  void insert(const AuxConstants& aux);

  std::vector<AuxConstants> all() const;
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

// Convenience: bundle for a config (positions taken relative to the wall),
// going through the given cache.
AuxConstants aux_for_config(const WaveguideConfig& config,
                            ConstantsCache& cache, double tolerance = 1e-6);

}  // namespace slitwave

#endif  // SLITWAVE_AUX_CONSTANTS_HPP
