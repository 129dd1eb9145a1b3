// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <numbers>

#include "slitwave/aux_constants.hpp"
#include "slitwave/fem.hpp"
#include "slitwave/strip_greens.hpp"
#include "slitwave/sweep.hpp"

namespace {

using namespace slitwave;
constexpr double kPi = std::numbers::pi;

WaveguideConfig reference_config() {
  WaveguideConfig config;
  config.omega = 0.8 * kPi;
  config.epsilon = 0.05;
  config.p_plus = -0.025;
  config.p_minus = -2.5;
  return config;
}

const DomainDescription& reference_domain() {
  static const DomainDescription dom = build_domain(reference_config(), 4.5, 2.0);
  return dom;
}

const StructuredMesh& reference_mesh() {
  static const StructuredMesh mesh = build_mesh(reference_domain(), 0.05, 4.0);
  return mesh;
}

void BM_MeshBuild(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_mesh(reference_domain(), 0.05, 4.0));
  }
}
BENCHMARK(BM_MeshBuild);

void BM_AssembleOperators(benchmark::State& state) {
  const StructuredMesh& mesh = reference_mesh();
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_operators(mesh));
  }
  state.counters["elements"] = mesh.n_elements();
}
BENCHMARK(BM_AssembleOperators);

void BM_FullSolve(benchmark::State& state) {
  const WaveguideConfig config = reference_config();
  FemOptions options;
  options.mesh_h0 = state.range(0) / 1000.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_waveguide(config, options));
  }
}
BENCHMARK(BM_FullSolve)->Arg(80)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_GreensSelfConstant(benchmark::State& state) {
  const double omega = 0.8 * kPi;
  const long n_terms = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_gamma(omega, -2.5, -2.5, n_terms));
  }
}
BENCHMARK(BM_GreensSelfConstant)->Arg(10000)->Arg(100000);

void BM_EtaModelCell(benchmark::State& state) {
  double bp = -3.0;
  for (auto _ : state) {
    bp += 1e-9;
    benchmark::DoNotOptimize(scattering_eta({bp, -1.0 / bp}, 0.024, 1, 1));
  }
}
BENCHMARK(BM_EtaModelCell);

void BM_AsymSweep41(benchmark::State& state) {
  const WaveguideConfig config = reference_config();
  const AuxConstants aux =
      compute_aux_constants(config.omega, config.p_plus, config.p_minus, 1e-4);
  SweepGridSpec grid;
  grid.plus_min = -5.0;
  grid.plus_max = 5.0;
  grid.n_plus = 41;
  grid.minus_min = -5.0;
  grid.minus_max = 5.0;
  grid.n_minus = 41;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(config, aux, grid, false));
  }
  state.counters["cells"] = 41.0 * 41.0;
}
BENCHMARK(BM_AsymSweep41)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
