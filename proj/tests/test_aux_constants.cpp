// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <thread>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "slitwave/aux_constants.hpp"
#include "slitwave/errors.hpp"
#include "slitwave/geometry.hpp"
#include "slitwave/strip_greens.hpp"

using namespace slitwave;

namespace {
constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);

std::string temp_cache_path(const char* tag) {
  return std::string("aux_cache_test_") + tag + ".cache";
}
}  // namespace

TEST_CASE("constant bundle matches its components", "[aux]") {
  const double omega = 0.8 * kPi;
  const AuxConstants aux = compute_aux_constants(omega, -0.025, -2.5, 1e-6);
  REQUIRE(aux.gamma_plus_defined());
  REQUIRE(aux.g_const == compute_g_const(omega, 100000));
  REQUIRE(aux.gamma_minus == compute_gamma(omega, -2.5, -2.5, 100000));
  REQUIRE(aux.gamma_plus == compute_gamma(omega, -0.025, -0.025, 100000));
  REQUIRE(aux.gamma_tilde == compute_gamma(omega, -0.025, -2.5, 100000));
  REQUIRE(std::abs((omega * aux.gamma_tilde).imag() -
                   std::cos(omega * 0.025) * std::cos(omega * 2.5)) < 1e-8);
}

TEST_CASE("corner position: coupling defined, self constant not", "[aux]") {
  const double omega = 0.8 * kPi;
  const AuxConstants aux = compute_aux_constants(omega, 0.0, -2.5, 1e-6);
  REQUIRE_FALSE(aux.gamma_plus_defined());
  REQUIRE(std::isfinite(aux.gamma_tilde.real()));
  // cos(omega p) = 1 exactly at both reference positions: eta is available.
  const double eta = coupling_eta(aux);
  REQUIRE(std::abs(eta) < 0.1);
  REQUIRE(std::abs((omega * aux.gamma_tilde).imag() - 1.0) < 1e-8);
}

TEST_CASE("far-field amplitudes", "[aux]") {
  const double omega = 0.5 * kPi;
  const AuxConstants aux = compute_aux_constants(omega, -1.5, -3.5, 1e-4);
  const FarFieldAmplitudes ff = far_field_amplitudes(aux);
  REQUIRE(ff.s_plus == kI * std::cos(omega * -1.5) / omega);
  REQUIRE(ff.s_minus == kI * std::cos(omega * -3.5) / omega);
  REQUIRE(ff.eta == (omega * aux.gamma_tilde).real());
}

TEST_CASE("coupling eta: regime gate and definition", "[aux]") {
  const double omega = 0.8 * kPi;
  // cos(omega * 0.025) != 1: outside the design normalization.
  const AuxConstants off = compute_aux_constants(omega, -0.025, -2.5, 1e-4);
  REQUIRE_THROWS_AS(coupling_eta(off), RegimeError);
  // eta equals the real part of omega gamma~ by definition.
  const AuxConstants on = compute_aux_constants(omega, 0.0, -2.5, 1e-4);
  REQUIRE(coupling_eta(on) ==
          (omega * compute_gamma(omega, 0.0, -2.5, 100000)).real());
}

TEST_CASE("coupling decays with slit separation", "[aux]") {
  // omega gamma~ approaches i cos(omega p+) e^{-i omega p-}; the remainder
  // is the evanescent series and dies off with the separation.
  const double omega = 0.55 * kPi;
  const double pp = -0.5;
  double prev = 1e300;
  for (double pm : {-2.0, -3.0, -4.0, -5.0}) {
    const auto tilde = compute_gamma(omega, pp, pm, 100000);
    const std::complex<double> predicted =
        kI * std::cos(omega * pp) *
        std::exp(std::complex<double>(0.0, -omega * pm));
    const double gap = std::abs(omega * tilde - predicted);
    REQUIRE(gap < prev);
    prev = gap;
  }
  REQUIRE(prev < 1e-3);
}

TEST_CASE("constants cache: record format and lookup", "[aux]") {
  const std::string path = temp_cache_path("format");
  std::remove(path.c_str());
  ConstantsCache cache(path);

  const double omega = 0.8 * kPi;
  const AuxConstants first = cache.get(omega, -0.025, -2.5, 1e-4);
  const auto hit = cache.lookup(omega, -0.025, -2.5, 1e-4);
  REQUIRE(hit.has_value());
  REQUIRE(hit->c_xi == first.c_xi);
  REQUIRE(hit->g_const == first.g_const);
  REQUIRE(hit->gamma_tilde == first.gamma_tilde);

  // One append-only record with the 13 documented fields.
  std::ifstream in(path);
  std::string line;
  REQUIRE(std::getline(in, line));
  int fields = 1;
  for (char c : line) fields += (c == ' ');
  REQUIRE(fields == 13);
  REQUIRE_FALSE(std::getline(in, line));

  // A second get must not recompute or append.
  const AuxConstants second = cache.get(omega, -0.025, -2.5, 1e-4);
  REQUIRE(second.gamma_minus == first.gamma_minus);
  std::ifstream again(path);
  int lines = 0;
  while (std::getline(again, line)) ++lines;
  REQUIRE(lines == 1);
  std::remove(path.c_str());
}

TEST_CASE("constants cache: concurrent readers", "[aux]") {
  const std::string path = temp_cache_path("mt");
  std::remove(path.c_str());
  ConstantsCache cache(path);
  const double omega = 0.5 * kPi;
  const AuxConstants seed = cache.get(omega, -1.0, -2.0, 1e-4);

  std::vector<std::thread> readers;
  std::vector<AuxConstants> results(4);
  for (int t = 0; t < 4; ++t) {
    readers.emplace_back([&, t] {
      ConstantsCache view(path);
      results[t] = view.get(omega, -1.0, -2.0, 1e-4);
    });
  }
  for (auto& r : readers) r.join();
  for (const auto& aux : results) {
    REQUIRE(aux.g_const == seed.g_const);
    REQUIRE(aux.gamma_tilde == seed.gamma_tilde);
  }
  std::remove(path.c_str());
}

TEST_CASE("cache directory comes from the environment", "[aux]") {
  setenv("SLITWAVE_CACHE_DIR", "/tmp/slitwave_cache_env_test", 1);
  const ConstantsCache cache;
  REQUIRE(cache.path() == "/tmp/slitwave_cache_env_test/constants.cache");
  unsetenv("SLITWAVE_CACHE_DIR");
  const ConstantsCache fallback;
  REQUIRE(fallback.path() == "slitwave_constants.cache");
}

TEST_CASE("aux_for_config uses wall-relative positions", "[aux]") {
  const std::string path = temp_cache_path("wall");
  std::remove(path.c_str());
  ConstantsCache cache(path);

  WaveguideConfig config;
  config.omega = 0.8 * kPi;
  config.epsilon = 0.05;
  config.wall_x = 1.0;
  config.p_plus = 1.0 - 0.025;
  config.p_minus = 1.0 - 2.5;
  const AuxConstants aux = aux_for_config(config, cache, 1e-4);
  REQUIRE(aux.p_plus == Catch::Approx(-0.025).margin(1e-15));
  REQUIRE(aux.p_minus == Catch::Approx(-2.5).margin(1e-15));
  std::remove(path.c_str());
}
