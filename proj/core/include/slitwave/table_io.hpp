// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SLITWAVE_TABLE_IO_HPP
#define SLITWAVE_TABLE_IO_HPP

#include <string>
#include <vector>

#include "slitwave/sweep.hpp"

namespace slitwave {

// One parsed CSV record of a sweep table.
struct SweepRecord {
  double lp_eps = 0.0;
  double lm_eps = 0.0;
  double beta_p = 0.0;
  double beta_m = 0.0;
  ScatteringTriple triple;
  std::string source;  // "asym" or "fem"
};

// Full-precision (17 significant digits) CSV emission.  Every file starts
// with a `# run: <id>` comment, then the fixed header
//   Lp_eps,Lm_eps,beta_p,beta_m,R_re,R_im,Tp_re,Tp_im,Tm_re,Tm_im,energy_residual,source
// with one asym row per cell and one fem row per cell that has one.
void write_sweep_csv(const SweepTable& table, const std::string& path,
                     const std::string& run_id);
std::vector<SweepRecord> read_sweep_csv(const std::string& path);

// Curve CSV: Lp_eps,Lm_eps,beta_p,beta_m,absR,absTp,absTm.
void write_curve_csv(const MinReflectionCurve& curve, const std::string& path,
                     const std::string& run_id);

// Full round-trip double formatting used by all emitters.
std::string format_double(double v);

}  // namespace slitwave

#endif  // SLITWAVE_TABLE_IO_HPP
