// Copyright 2026 The tbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "tbell/io.hpp"
#include "tbell/verify.hpp"

using namespace tbell;
namespace fs = std::filesystem;

namespace {

// Scratch directory, removed when the last test in this translation unit
// that uses it has run.
const fs::path& scratch_dir() {
  static const fs::path dir = [] {
    std::random_device rd;
    const fs::path p = fs::temp_directory_path() /
                       ("tbell-cli-test-" + std::to_string(rd()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string("\"") + TBELL_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

int run_shell(const std::string& cmd) {
  const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string read_file(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  REQUIRE(is.good());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) {
    if (c == '\n') ++n;
  }
  return n;
}

std::string quoted(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_CASE("printed doubles round-trip exactly", "[io]") {
  for (double v : {std::numbers::pi, 1.0 / 3.0, 1e-300, 2.547132701, 0.0,
                   -0.0, 1e308, -17.25}) {
    CHECK(std::stod(io::format_double(v)) == v);
  }
  CHECK(io::format_double(0.5) == "0.5");
  CHECK(io::format_double(-2.0) == "-2");
}

TEST_CASE("csv writers emit exact rows", "[io]") {
  SweepResult result;
  result.grid = {{0.5, -1.0, 2.25, 0.125}, {1.0, 0.0, 2.0, 0.0}};
  std::ostringstream sweep_csv;
  io::write_sweep_csv(sweep_csv, result);
  CHECK(sweep_csv.str() ==
        "f,g,max_B,argmax_t\n0.5,-1,2.25,0.125\n1,0,2,0\n");

  BellTrace trace;
  trace.times = {0.0, 0.5};
  trace.values = {2.0, 1.75};
  std::ostringstream trace_csv;
  io::write_trace_csv(trace_csv, trace);
  CHECK(trace_csv.str() == "t,B\n0,2\n0.5,1.75\n");

  std::ostringstream pair_csv;
  io::write_pair_csv(pair_csv, {{0.0, 1.0}, {0.25, -0.5}});
  CHECK(pair_csv.str() == "t,E\n0,1\n0.25,-0.5\n");

  std::ostringstream circuit_csv;
  io::write_circuit_csv(circuit_csv,
                        {{0.5, 1.0, 0.0, 0.0, 1.0, 2.0, 4}});
  CHECK(circuit_csv.str() == "t,E_zz,E_zx,E_xz,E_xx,B\n0.5,1,0,0,1,2\n");
}

TEST_CASE("sweep summary carries config and result", "[io]") {
  SweepResult result;
  result.config.grid_n = 3;
  result.grid = {{0.0, 0.0, 2.0, 0.0}};
  result.global_max = result.grid.front();
  result.violation_fraction = 0.25;
  const nlohmann::json j = io::sweep_summary(result);
  CHECK(j["config"]["grid_n"] == 3);
  CHECK(j["config"]["t_steps"] == 629);
  CHECK(j["config"]["backend"] == "numeric");
  CHECK(j["global_max"]["max_B"] == 2.0);
  CHECK(j["violation_fraction"] == 0.25);
  CHECK(j["violation_threshold"] == 2.0 + k_violation_epsilon);

  const nlohmann::json full = io::sweep_json(result);
  CHECK(full["columns"] ==
        nlohmann::json({"f", "g", "max_B", "argmax_t"}));
  CHECK(full["grid"].size() == 1);
}

TEST_CASE("verification suites pass at their shipped tolerances", "[verify]") {
  const std::vector<SuiteResult> results = run_verification(99);
  CHECK(results.size() == 11);
  for (const SuiteResult& r : results) {
    INFO(r.name << ": max_error " << r.max_error << " vs tolerance "
                << r.tolerance);
    CHECK(r.passed);
    CHECK(r.checks > 0);
  }
  CHECK(all_passed(results));

  // An absurd override must fail: the suites measure real round-off.
  const std::vector<SuiteResult> strict = run_verification(99, 1e-30);
  CHECK_FALSE(all_passed(strict));
}

TEST_CASE("cli reports usage errors without writing files", "[cli]") {
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("") == 2);
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("trace --no-such-flag 1") == 2);
  CHECK(run_cli("trace --state q+") == 2);
  CHECK(run_cli("trace --preset no-such-scenario") == 2);
  CHECK(run_cli("trace --preset fig4a-quantumH -f 0.5") == 2);
  CHECK(run_cli("trace --state y+ --alpha 0.1") == 2);
  CHECK(run_cli("sweep --f-range 2:-2") == 2);
  CHECK(run_cli("sweep --f-range 1:2x") == 2);
  CHECK(run_cli("circuit --basis1 z") == 2);
  CHECK(run_cli("circuit --basis1 z --basis2 y") == 2);
  CHECK(run_cli("circuit --t-steps 1") == 2);
}

TEST_CASE("trace command writes the requested grid", "[cli]") {
  const fs::path out = scratch_dir() / "trace-a.csv";
  REQUIRE(run_cli("trace --preset fig4b-quantumH --t-steps 50 --out " +
                  quoted(out)) == 0);
  const std::string text = read_file(out);
  CHECK(text.rfind("t,B\n", 0) == 0);
  CHECK(count_lines(text) == 51);

  // Same invocation, byte-identical output.
  const fs::path again = scratch_dir() / "trace-b.csv";
  REQUIRE(run_cli("trace --preset fig4b-quantumH --t-steps 50 --out " +
                  quoted(again)) == 0);
  CHECK(read_file(again) == text);

  // JSON format carries the scenario and the seed. A 50-point grid samples
  // densely enough that some node violates the classical bound.
  const fs::path jpath = scratch_dir() / "trace.json";
  REQUIRE(run_cli("trace --preset fig4b-quantumH --t-steps 50 --format json "
                  "--seed 777 --out " +
                  quoted(jpath)) == 0);
  const nlohmann::json j = nlohmann::json::parse(read_file(jpath));
  CHECK(j["seed"] == 777);
  CHECK(j["times"].size() == 50);
  CHECK(j["params"]["f"] == 1.0);
  CHECK(j["max_B"].get<double>() > 2.0);
}

TEST_CASE("sweep command honors config files with flag precedence", "[cli]") {
  const fs::path cfg = scratch_dir() / "sweep.cfg";
  {
    std::ofstream os(cfg);
    os << "grid = 3\nt-steps = 40\nt-max = 3.0\n";
  }
  const fs::path out3 = scratch_dir() / "sweep3.csv";
  REQUIRE(run_cli("sweep --config " + quoted(cfg) + " --out " +
                  quoted(out3)) == 0);
  CHECK(count_lines(read_file(out3)) == 10);  // header + 3x3 grid
  CHECK(fs::exists(scratch_dir() / "sweep3.summary.json"));

  const fs::path out2 = scratch_dir() / "sweep2.csv";
  REQUIRE(run_cli("sweep --config " + quoted(cfg) + " --grid 2 --out " +
                  quoted(out2)) == 0);
  CHECK(count_lines(read_file(out2)) == 5);  // flag beats config

  const nlohmann::json summary = nlohmann::json::parse(
      read_file(scratch_dir() / "sweep2.summary.json"));
  CHECK(summary["config"]["grid_n"] == 2);
  CHECK(summary["config"]["t_steps"] == 40);
}

TEST_CASE("single-point sweep reports one grid cell", "[cli]") {
  const fs::path out = scratch_dir() / "point.json";
  REQUIRE(run_cli("sweep -f 1 -g 0 -c 1 --beta 1 --t-steps 629 "
                  "--format json --out " +
                  quoted(out)) == 0);
  const nlohmann::json j = nlohmann::json::parse(read_file(out));
  REQUIRE(j["grid"].size() == 1);
  CHECK(j["config"]["grid_n"] == 1);
  CHECK(j["violation_fraction"] == 1.0);
  const double max_b = j["global_max"]["max_B"].get<double>();
  CHECK(std::abs(max_b - (1.0 + std::numbers::sqrt2)) < 1e-9);
}

TEST_CASE("default output lands in the directory the environment names",
          "[cli]") {
  const fs::path dir = scratch_dir() / "envout";
  fs::create_directories(dir);
  const std::string cmd = "TBELL_OUT_DIR=" + quoted(dir) + " " +
                          quoted(TBELL_CLI_PATH) +
                          " trace --t-steps 5 -c 1 -f 1";
  REQUIRE(run_shell(cmd) == 0);
  CHECK(fs::exists(dir / "trace.csv"));
}

TEST_CASE("unwritable output paths exit with the i/o code", "[cli]") {
  const fs::path missing = scratch_dir() / "no-such-dir" / "trace.csv";
  CHECK(run_cli("trace --t-steps 5 --out " + quoted(missing)) == 3);
}

TEST_CASE("circuit command covers pair and four-basis modes", "[cli]") {
  // Simultaneous records in crossed bases are uncorrelated.
  const fs::path pair = scratch_dir() / "pair.csv";
  REQUIRE(run_cli("circuit --basis1 z --basis2 x --t 0 -c 1 -f 1 --out " +
                  quoted(pair)) == 0);
  const std::string text = read_file(pair);
  REQUIRE(text.rfind("t,E\n", 0) == 0);
  const std::string row = text.substr(4);
  const std::size_t comma = row.find(',');
  REQUIRE(comma != std::string::npos);
  CHECK(std::stod(row.substr(0, comma)) == 0.0);
  CHECK(std::abs(std::stod(row.substr(comma + 1))) <= 1e-12);

  // Four-basis grid mode via a preset, JSON output.
  const fs::path full = scratch_dir() / "circuit.json";
  REQUIRE(run_cli("circuit --preset fig4a-quantumH --t-steps 9 "
                  "--format json --out " +
                  quoted(full)) == 0);
  const nlohmann::json j = nlohmann::json::parse(read_file(full));
  REQUIRE(j["rows"].size() == 9);
  CHECK(j["rows"][0]["protocol_runs"] == 4);
  CHECK(std::abs(j["rows"][0]["B"].get<double>() - 2.0) < 1e-12);
  CHECK(j["damping"] == 1.0);
}

TEST_CASE("verify command exit code tracks the outcome", "[cli]") {
  CHECK(run_cli("verify --seed 7") == 0);
  CHECK(run_cli("verify --seed 7 -t 1e-30") == 1);

  const fs::path report = scratch_dir() / "verify.json";
  REQUIRE(run_cli("verify --seed 7 --out " + quoted(report)) == 0);
  const nlohmann::json j = nlohmann::json::parse(read_file(report));
  CHECK(j["all_passed"] == true);
  CHECK(j["seed"] == 7);
  CHECK(j["suites"].size() == 11);

  fs::remove_all(scratch_dir());  // last CLI test; drop the scratch space
}