// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SLITWAVE_SWEEP_HPP
#define SLITWAVE_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "slitwave/asymptotic.hpp"
#include "slitwave/fem.hpp"

namespace slitwave {

// Grid axes for a (slit_+, slit_-) sweep.  Axes may be given either as
// detunings (beta space) or directly as slit lengths; one sweep engine
// serves both parameterizations, converting through the constant bundle.
struct SweepGridSpec {
  enum class Axis { beta, length };
  Axis axis = Axis::beta;
  double plus_min = -3.0, plus_max = 3.0;
  int n_plus = 21;
  double minus_min = -3.0, minus_max = 3.0;
  int n_minus = 21;
};

struct SweepCell {
  double length_plus = 0.0;   // L^eps_+
  double length_minus = 0.0;  // L^eps_-
  double beta_plus = 0.0;
  double beta_minus = 0.0;
  ScatteringTriple asym;
  std::optional<ScatteringTriple> fem;
  bool failed = false;
  std::string error;
  double seconds = 0.0;  // wall clock of the FEM solve
};

struct SweepTable {
  SweepGridSpec spec;
  std::vector<double> axis_plus;   // strictly increasing grid values
  std::vector<double> axis_minus;
  std::vector<SweepCell> cells;    // row-major, plus index fastest

  const SweepCell& at(int i_plus, int i_minus) const;
  bool has_full_fem() const;
};

// Populates the grid.  Asymptotic triples (the coupled eta model) are
// always computed; FEM triples when `with_fem` is set, dispatched to
// `workers` threads over cells (each cell is solved serially, so results
// do not depend on the worker count).  Per-cell failures are recorded in
// the cell, not thrown.
SweepTable run_sweep(const WaveguideConfig& config, const AuxConstants& aux,
                     const SweepGridSpec& grid, bool with_fem,
                     const FemOptions& options = {}, int workers = 1);

struct CurvePoint {
  double length_plus = 0.0;
  double length_minus = 0.0;
  double beta_plus = 0.0;
  double beta_minus = 0.0;
  double abs_r = 0.0;
  double abs_t_plus = 0.0;
  double abs_t_minus = 0.0;
};

// Per-column minimum of |R| (columns = fixed slit_+ value; ties broken by
// the smaller slit_- value).  Uses the FEM triples when every cell has
// one, the asymptotic triples otherwise.
struct MinReflectionCurve {
  std::vector<CurvePoint> points;
  bool from_fem = false;
};
MinReflectionCurve extract_min_reflection_curve(const SweepTable& table);

// End-to-end design pipeline: target ratio -> detunings -> lengths -> one
// FEM verification solve.
struct DesignReport {
  double target_ratio = 0.0;
  BetaPair beta;
  double lp_plus = 0.0, lp_minus = 0.0;        // length corrections L'
  double length_plus = 0.0, length_minus = 0.0;
  double eta = 0.0;                            // measured coupling
  ScatteringTriple predicted;                  // eta-model prediction
  ScatteringTriple achieved;                   // FEM result
  double predicted_ratio = 0.0;
  double achieved_ratio = 0.0;
  double fem_seconds = 0.0;
};
DesignReport design_and_verify(const WaveguideConfig& config,
                               const AuxConstants& aux, double target_ratio,
                               const FemOptions& options = {});

}  // namespace slitwave

#endif  // SLITWAVE_SWEEP_HPP
