// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "catch2/catch_amalgamated.hpp"
#include "cli_app.hpp"

using namespace slitwave;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& p) : path(p) {}
  ~TempFile() { std::remove(path.c_str()); }
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

const char* kSmallConfig =
    "omega = 2.5132741228718345\n"
    "epsilon = 0.05\n"
    "p_plus = -0.025\n"
    "p_minus = -1.25\n"  // short trunk keeps CLI solves quick
    "mesh_h0 = 0.08\n"
    "mesh_grading = 2\n";

int run(const std::vector<std::string>& args, std::string* stdout_text) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  if (stdout_text != nullptr) *stdout_text = out.str();
  return code;
}

}  // namespace

TEST_CASE("cli: asym happy path", "[cli]") {
  TempFile cfg("cli_test_asym.cfg");
  write_file(cfg.path, kSmallConfig);
  std::string text;
  const int code = run({"asym", "--config", cfg.path}, &text);
  REQUIRE(code == 0);
  const auto j = nlohmann::json::parse(text);
  REQUIRE(j.contains("beta_plus"));
  REQUIRE(j.contains("R0"));
  REQUIRE(j["energy_residual"].get<double>() < 1e-12);
}

TEST_CASE("cli: design happy path", "[cli]") {
  TempFile cfg("cli_test_design.cfg");
  write_file(cfg.path, kSmallConfig);
  std::string text;
  const int code =
      run({"design", "--ratio", "1", "--config", cfg.path}, &text);
  REQUIRE(code == 0);
  const auto j = nlohmann::json::parse(text);
  REQUIRE(j["beta_plus"].get<double>() == 1.0);
  REQUIRE(j["beta_minus"].get<double>() == -1.0);
  REQUIRE(j["L_eps_plus"].get<double>() < 1.25);
}

TEST_CASE("cli: validation failures exit 1", "[cli]") {
  TempFile cfg("cli_test_bad.cfg");
  write_file(cfg.path,
             "omega = 4.8\nepsilon = 0.05\np_plus = -0.1\np_minus = -2\n");
  REQUIRE(run({"asym", "--config", cfg.path}, nullptr) == 1);

  TempFile missing("cli_test_missing.cfg");
  write_file(missing.path, "omega = 2.5\n");
  REQUIRE(run({"asym", "--config", missing.path}, nullptr) == 1);

  REQUIRE(run({"asym", "--config", "/nonexistent.cfg"}, nullptr) == 1);
  REQUIRE(run({"frobnicate"}, nullptr) == 1);
  REQUIRE(run({"design", "--ratio", "-1", "--config", cfg.path}, nullptr) ==
          1);
}

TEST_CASE("cli: solver failures exit 2", "[cli]") {
  TempFile cfg("cli_test_mesh.cfg");
  // mesh_h0 above the resolution bound: unsolvable mesh spec.
  write_file(cfg.path,
             "omega = 2.5132741228718345\nepsilon = 0.05\np_plus = -0.025\n"
             "p_minus = -1.25\nmesh_h0 = 0.5\n");
  REQUIRE(run({"fem", "--config", cfg.path}, nullptr) == 2);
}

TEST_CASE("cli: sweep writes CSV and manifest", "[cli]") {
  TempFile cfg("cli_test_sweep.cfg");
  write_file(cfg.path, kSmallConfig);
  TempFile csv("cli_test_sweep_out.csv");
  TempFile manifest("cli_test_sweep_out.csv.manifest.json");
  std::string text;
  const int code = run({"sweep", "--config", cfg.path, "--grid",
                        "beta:-1:1:3", "--out", csv.path},
                       &text);
  REQUIRE(code == 0);

  std::ifstream in(csv.path);
  REQUIRE(in.good());
  std::string first;
  std::getline(in, first);
  REQUIRE(first.rfind("# run: ", 0) == 0);
  const std::string run_id = first.substr(7);

  std::ifstream min(manifest.path);
  REQUIRE(min.good());
  nlohmann::json j;
  min >> j;
  REQUIRE(j["run_id"] == run_id);
  REQUIRE(j["outputs"][0] == csv.path);
  REQUIRE(j["config"]["epsilon"] == "0.05");
}

TEST_CASE("cli: rerunning a config reproduces the sweep file exactly",
          "[cli]") {
  TempFile cfg("cli_test_repro.cfg");
  write_file(cfg.path, kSmallConfig);
  TempFile a("cli_repro_a.csv");
  TempFile am("cli_repro_a.csv.manifest.json");
  TempFile b("cli_repro_b.csv");
  TempFile bm("cli_repro_b.csv.manifest.json");
  REQUIRE(run({"sweep", "--config", cfg.path, "--grid", "beta:-1:1:4",
               "--out", a.path},
              nullptr) == 0);
  REQUIRE(run({"sweep", "--config", cfg.path, "--grid", "beta:-1:1:4",
               "--out", b.path},
              nullptr) == 0);
  std::ifstream fa(a.path), fb(b.path);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  REQUIRE(sa.str() == sb.str());
  REQUIRE_FALSE(sa.str().empty());
}

TEST_CASE("cli: field writes grid text and pixmap", "[cli]") {
  TempFile cfg("cli_test_field.cfg");
  write_file(cfg.path, kSmallConfig);
  TempFile grid("cli_field_out.grid.txt");
  TempFile pgm("cli_field_out.pgm");
  TempFile manifest("cli_field_out.grid.txt.manifest.json");
  std::string text;
  const int code =
      run({"field", "--config", cfg.path, "--out", "cli_field_out"}, &text);
  REQUIRE(code == 0);
  REQUIRE(std::ifstream(grid.path).good());
  REQUIRE(std::ifstream(pgm.path).good());
  const auto j = nlohmann::json::parse(text);
  REQUIRE(j.contains("abs"));
}
