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
//
// Command-line front end: coupling-plane sweeps, single-scenario traces,
// circuit-protocol emulation, and the self-verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tbell/tbell.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr double k_two_pi = 2.0 * std::numbers::pi;
constexpr double k_deg_to_rad = std::numbers::pi / 180.0;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { csv, json_file };

const std::map<std::string, Format>& format_map() {
  static const std::map<std::string, Format> m{{"csv", Format::csv},
                                               {"json", Format::json_file}};
  return m;
}

const std::map<std::string, tbell::Backend>& backend_map() {
  static const std::map<std::string, tbell::Backend> m{
      {"numeric", tbell::Backend::numeric},
      {"closed", tbell::Backend::closed_form}};
  return m;
}

const std::map<std::string, tbell::MediatorState>& state_map() {
  static const std::map<std::string, tbell::MediatorState> m{
      {"mixed", tbell::MediatorState::maximally_mixed()},
      {"x+", tbell::MediatorState::x_plus()},
      {"x-", tbell::MediatorState::x_minus()},
      {"y+", tbell::MediatorState::y_plus()},
      {"y-", tbell::MediatorState::y_minus()},
      {"z+", tbell::MediatorState::z_plus()},
      {"z-", tbell::MediatorState::z_minus()}};
  return m;
}

const std::map<std::string, tbell::ProbeAxis>& basis_map() {
  static const std::map<std::string, tbell::ProbeAxis> m{
      {"z", tbell::ProbeAxis::Z}, {"x", tbell::ProbeAxis::X}};
  return m;
}

// --out wins; otherwise TBELL_OUT_DIR (if set) hosts the default file name.
fs::path resolve_out(const std::string& out_flag,
                     const std::string& default_name) {
  if (!out_flag.empty()) return fs::path(out_flag);
  if (const char* dir = std::getenv("TBELL_OUT_DIR")) {
    return fs::path(dir) / default_name;
  }
  return fs::path(default_name);
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
  os << text;
  os.flush();
  if (!os) throw IoError("write to '" + path.string() + "' failed");
}

std::array<double, 2> parse_range(const std::string& text,
                                  const std::string& flag) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw UsageError(flag + ": expected lo:hi, got '" + text + "'");
  }
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo_text = text.substr(0, colon);
    const std::string hi_text = text.substr(colon + 1);
    const double lo = std::stod(lo_text, &used_lo);
    const double hi = std::stod(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size()) {
      throw UsageError(flag + ": trailing characters in '" + text + "'");
    }
    if (lo > hi) throw UsageError(flag + ": lo must not exceed hi");
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": cannot parse '" + text + "'");
  } catch (const std::out_of_range&) {
    throw UsageError(flag + ": value out of range in '" + text + "'");
  }
}

// Per-subcommand option bundle. Every subcommand carries the Hamiltonian
// coefficients and mediator-state flags; which ones are honored is the
// subcommand's business.
struct CommonOpts {
  tbell::HamiltonianParams params{};
  std::string state_name = "y+";
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  std::string preset;
  std::string config_file;
  std::string out;
  Format format = Format::csv;
  tbell::Backend backend = tbell::Backend::numeric;
  std::uint64_t seed = 12345;
  double t_max = k_two_pi;
  int t_steps = 629;

  CLI::Option* state_opt = nullptr;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* beta_opt = nullptr;
  CLI::Option* gamma_opt = nullptr;
  CLI::Option* preset_opt = nullptr;
  CLI::Option* param_opts[6] = {};

  [[nodiscard]] bool any_param_given() const {
    for (const CLI::Option* o : param_opts) {
      if (o != nullptr && o->count() > 0) return true;
    }
    return state_opt->count() > 0 || alpha_opt->count() > 0 ||
           beta_opt->count() > 0 || gamma_opt->count() > 0;
  }

  [[nodiscard]] tbell::MediatorState state() const {
    const bool bloch_given = alpha_opt->count() > 0 ||
                             beta_opt->count() > 0 || gamma_opt->count() > 0;
    if (bloch_given && state_opt->count() > 0) {
      throw UsageError("--state conflicts with --alpha/--beta/--gamma");
    }
    if (bloch_given) return tbell::MediatorState::bloch(alpha, beta, gamma);
    return state_map().at(state_name);
  }
};

std::vector<std::string> state_names() {
  std::vector<std::string> names;
  for (const auto& [name, unused] : state_map()) names.push_back(name);
  return names;
}

void add_common(CLI::App* cmd, CommonOpts& o, double default_c,
                const std::string& default_state) {
  o.params.c = default_c;
  o.state_name = default_state;
  o.param_opts[0] = cmd->add_option("-a,--a", o.params.a, "probe z coefficient");
  o.param_opts[1] =
      cmd->add_option("-b,--b", o.params.b, "mediator z coefficient");
  o.param_opts[2] = cmd->add_option("-c,--c", o.params.c, "zz coupling");
  o.param_opts[3] = cmd->add_option("-f,--f", o.params.f, "exchange coupling");
  o.param_opts[4] =
      cmd->add_option("-g,--g", o.params.g, "chiral exchange coupling");
  o.param_opts[5] = cmd->add_option("-r,--r", o.params.r, "identity offset");
  o.state_opt =
      cmd->add_option("--state", o.state_name,
                      "mediator state by name (mixed, x+, x-, y+, y-, z+, z-)")
          ->check(CLI::IsMember(state_names()));
  o.alpha_opt = cmd->add_option("--alpha", o.alpha, "mediator Bloch <x>");
  o.beta_opt = cmd->add_option("--beta", o.beta, "mediator Bloch <y>");
  o.gamma_opt = cmd->add_option("--gamma", o.gamma, "mediator Bloch <z>");
  cmd->add_option("--t-max", o.t_max, "time horizon")
      ->capture_default_str();
  cmd->add_option("--t-steps", o.t_steps,
                  "time grid points, endpoints included")
      ->capture_default_str();
  cmd->add_option("-o,--out", o.out,
                  "output path (default: per-subcommand name, in "
                  "TBELL_OUT_DIR if set)");
  cmd->add_option("--format", o.format, "output format: csv or json")
      ->transform(CLI::CheckedTransformer(format_map()));
  cmd->add_option("--seed", o.seed, "random seed (echoed in JSON output)")
      ->capture_default_str();
  cmd->add_option("--config", o.config_file,
                  "read defaults from a flat key = value file (explicit "
                  "flags win)");
}

// Apply a flat key = value file to a subcommand's options after the command
// line is parsed: CLI11 skips non-empty options, so explicit flags win.
void load_config(CLI::App* cmd, const std::string& path) {
  if (path.empty()) return;
  std::ifstream is(path);
  if (!is) throw UsageError("cannot read config file '" + path + "'");
  cmd->parse_from_stream(is);
}

void apply_preset_or_params(const CommonOpts& o, tbell::HamiltonianParams& p,
                            tbell::MediatorState& state,
                            tbell::Rotation* prep = nullptr) {
  if (o.preset_opt != nullptr && o.preset_opt->count() > 0) {
    if (o.any_param_given()) {
      throw UsageError("--preset conflicts with explicit parameter flags");
    }
    const tbell::ScenarioPreset* preset = tbell::find_preset(o.preset);
    if (preset == nullptr) {
      std::string names;
      for (const auto& sp : tbell::scenario_presets()) {
        names += ' ';
        names += sp.name;
      }
      throw UsageError("unknown preset '" + o.preset + "'; available:" + names);
    }
    p = preset->params;
    state = preset->state;
    if (prep != nullptr) *prep = preset->mediator_prep;
  } else {
    p = o.params;
    state = o.state();
  }
}

// ------------------------------------------------------------------ sweep --

struct SweepOpts {
  CommonOpts common;
  std::string f_range = "-2:2";
  std::string g_range = "-2:2";
  int grid_n = 41;
  int threads = 1;
  CLI::Option* f_opt = nullptr;
  CLI::Option* g_opt = nullptr;
};

int cmd_sweep(const SweepOpts& o) {
  const bool single_point = o.f_opt->count() > 0 || o.g_opt->count() > 0;
  const tbell::MediatorState state = o.common.state();

  tbell::SweepResult result;
  if (single_point) {
    const tbell::HamiltonianParams p = o.common.params;
    const tbell::TimeMaximum tm = tbell::max_over_time(
        p, state, o.common.t_max, o.common.t_steps, o.common.backend);
    result.config.f_range = {p.f, p.f};
    result.config.g_range = {p.g, p.g};
    result.config.grid_n = 1;
    result.config.t_max = o.common.t_max;
    result.config.t_steps = o.common.t_steps;
    result.config.fixed = p;
    result.config.state = state;
    result.config.backend = o.common.backend;
    result.grid = {{p.f, p.g, tm.max_value, tm.argmax_t}};
    result.global_max = result.grid.front();
    result.violation_fraction =
        tm.max_value > 2.0 + tbell::k_violation_epsilon ? 1.0 : 0.0;
  } else {
    tbell::SweepConfig cfg;
    cfg.f_range = parse_range(o.f_range, "--f-range");
    cfg.g_range = parse_range(o.g_range, "--g-range");
    cfg.grid_n = o.grid_n;
    cfg.t_max = o.common.t_max;
    cfg.t_steps = o.common.t_steps;
    cfg.fixed = o.common.params;
    cfg.fixed.f = 0.0;
    cfg.fixed.g = 0.0;
    cfg.state = state;
    cfg.backend = o.common.backend;
    cfg.threads = o.threads;
    result = tbell::run_sweep(cfg);
  }

  json summary = tbell::io::sweep_summary(result);
  summary["seed"] = o.common.seed;
  if (o.common.format == Format::csv) {
    const fs::path csv_path = resolve_out(o.common.out, "sweep.csv");
    std::ostringstream csv;
    tbell::io::write_sweep_csv(csv, result);
    write_text(csv_path, csv.str());
    fs::path summary_path = csv_path;
    summary_path.replace_extension();
    summary_path += ".summary.json";
    write_text(summary_path, summary.dump(2) + "\n");
    std::cout << "wrote " << csv_path.string() << " and "
              << summary_path.string() << '\n';
  } else {
    json j = tbell::io::sweep_json(result);
    j["seed"] = o.common.seed;
    const fs::path path = resolve_out(o.common.out, "sweep.json");
    write_text(path, j.dump(2) + "\n");
    std::cout << "wrote " << path.string() << '\n';
  }
  std::cout << "global max B = " << tbell::io::format_double(
                   result.global_max.max_value)
            << " at f = " << tbell::io::format_double(result.global_max.f)
            << ", g = " << tbell::io::format_double(result.global_max.g)
            << ", t = "
            << tbell::io::format_double(result.global_max.argmax_t) << '\n'
            << "violation fraction = "
            << tbell::io::format_double(result.violation_fraction) << '\n';
  return 0;
}

// ------------------------------------------------------------------ trace --

int cmd_trace(const CommonOpts& o) {
  tbell::HamiltonianParams p;
  tbell::MediatorState state;
  apply_preset_or_params(o, p, state);
  const tbell::BellTrace trace =
      tbell::trace_curve(p, state, o.t_max, o.t_steps, o.backend);

  if (o.format == Format::csv) {
    const fs::path path = resolve_out(o.out, "trace.csv");
    std::ostringstream csv;
    tbell::io::write_trace_csv(csv, trace);
    write_text(path, csv.str());
    std::cout << "wrote " << path.string() << '\n';
  } else {
    json j = tbell::io::trace_json(trace);
    j["seed"] = o.seed;
    const fs::path path = resolve_out(o.out, "trace.json");
    write_text(path, j.dump(2) + "\n");
    std::cout << "wrote " << path.string() << '\n';
  }
  std::cout << "max B = " << tbell::io::format_double(trace.max_value)
            << " at t = " << tbell::io::format_double(trace.argmax_t) << '\n';
  return 0;
}

// ---------------------------------------------------------------- circuit --

struct CircuitOpts {
  CommonOpts common;
  double prep_theta_deg = 0.0;
  double prep_phi_deg = 0.0;
  double damping = 1.0;
  double t_single = 0.0;
  tbell::ProbeAxis basis1 = tbell::ProbeAxis::Z;
  tbell::ProbeAxis basis2 = tbell::ProbeAxis::Z;
  CLI::Option* t_opt = nullptr;
  CLI::Option* basis1_opt = nullptr;
  CLI::Option* basis2_opt = nullptr;
};

int cmd_circuit(const CircuitOpts& o) {
  tbell::HamiltonianParams p;
  tbell::MediatorState state;  // unused by the emulator; presets carry it
  tbell::Rotation prep{o.prep_theta_deg * k_deg_to_rad,
                       o.prep_phi_deg * k_deg_to_rad};
  apply_preset_or_params(o.common, p, state, &prep);

  std::vector<double> times;
  if (o.t_opt->count() > 0) {
    times.push_back(o.t_single);
  } else {
    if (o.common.t_steps < 2) {
      throw UsageError("--t-steps must be at least 2");
    }
    const double dt = o.common.t_max / (o.common.t_steps - 1);
    for (int i = 0; i < o.common.t_steps; ++i) {
      times.push_back(i == o.common.t_steps - 1 ? o.common.t_max : i * dt);
    }
  }

  const bool pair_mode = o.basis1_opt->count() > 0 || o.basis2_opt->count() > 0;
  if (o.basis1_opt->count() != o.basis2_opt->count()) {
    throw UsageError("--basis1 and --basis2 must be given together");
  }

  if (pair_mode) {
    std::vector<std::pair<double, double>> rows;
    rows.reserve(times.size());
    for (double t : times) {
      rows.emplace_back(
          t, tbell::run_protocol(
                 {o.basis1, o.basis2, prep, p, t, o.damping}));
    }
    if (o.common.format == Format::csv) {
      const fs::path path = resolve_out(o.common.out, "circuit.csv");
      std::ostringstream csv;
      tbell::io::write_pair_csv(csv, rows);
      write_text(path, csv.str());
      std::cout << "wrote " << path.string() << '\n';
    } else {
      json arr = json::array();
      for (const auto& [t, e] : rows) arr.push_back({{"t", t}, {"E", e}});
      json j{{"rows", std::move(arr)},
             {"params", tbell::io::params_json(p)},
             {"damping", o.damping},
             {"seed", o.common.seed}};
      const fs::path path = resolve_out(o.common.out, "circuit.json");
      write_text(path, j.dump(2) + "\n");
      std::cout << "wrote " << path.string() << '\n';
    }
    if (rows.size() == 1) {
      std::cout << "E = " << tbell::io::format_double(rows.front().second)
                << '\n';
    }
    return 0;
  }

  std::vector<tbell::CircuitBellPoint> rows;
  rows.reserve(times.size());
  for (double t : times) {
    rows.push_back(tbell::bell_from_circuit(p, prep, t, o.damping));
  }
  if (o.common.format == Format::csv) {
    const fs::path path = resolve_out(o.common.out, "circuit.csv");
    std::ostringstream csv;
    tbell::io::write_circuit_csv(csv, rows);
    write_text(path, csv.str());
    std::cout << "wrote " << path.string() << '\n';
  } else {
    json j = tbell::io::circuit_json(rows);
    j["params"] = tbell::io::params_json(p);
    j["damping"] = o.damping;
    j["seed"] = o.common.seed;
    const fs::path path = resolve_out(o.common.out, "circuit.json");
    write_text(path, j.dump(2) + "\n");
    std::cout << "wrote " << path.string() << '\n';
  }
  double best = rows.front().bell;
  double best_t = rows.front().t;
  for (const auto& r : rows) {
    if (r.bell > best) {
      best = r.bell;
      best_t = r.t;
    }
  }
  std::cout << "max B = " << tbell::io::format_double(best)
            << " at t = " << tbell::io::format_double(best_t) << '\n';
  return 0;
}

// ----------------------------------------------------------------- verify --

struct VerifyOpts {
  std::uint64_t seed = 12345;
  double tolerance = 0.0;
  std::string out;
  std::string config_file;
  CLI::Option* tol_opt = nullptr;
};

int cmd_verify(const VerifyOpts& o) {
  std::optional<double> tol_override;
  if (o.tol_opt->count() > 0) tol_override = o.tolerance;
  const std::vector<tbell::SuiteResult> results =
      tbell::run_verification(o.seed, tol_override);

  json suites = json::array();
  for (const tbell::SuiteResult& r : results) {
    suites.push_back({{"name", r.name},
                      {"checks", r.checks},
                      {"max_error", r.max_error},
                      {"tolerance", r.tolerance},
                      {"passed", r.passed}});
  }
  const bool ok = tbell::all_passed(results);
  const json report{{"seed", o.seed}, {"suites", std::move(suites)},
                    {"all_passed", ok}};
  std::cout << report.dump(2) << '\n';
  if (!o.out.empty()) {
    write_text(fs::path(o.out), report.dump(2) + "\n");
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Temporal Bell quantities for a qubit probe coupled to a two-level "
      "mediator"};
  app.require_subcommand(1);

  SweepOpts sweep_opts;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "max-over-time Bell quantity on an (f, g) coupling grid");
  add_common(sweep_cmd, sweep_opts.common, 1.0, "y+");
  sweep_cmd->add_option("--f-range", sweep_opts.f_range, "f range as lo:hi")
      ->capture_default_str();
  sweep_cmd->add_option("--g-range", sweep_opts.g_range, "g range as lo:hi")
      ->capture_default_str();
  sweep_cmd->add_option("--grid", sweep_opts.grid_n, "grid points per axis")
      ->capture_default_str();
  sweep_cmd->add_option("--threads", sweep_opts.threads,
                        "worker threads (output is thread-count independent)")
      ->capture_default_str();
  sweep_opts.f_opt = sweep_cmd->get_option("--f");
  sweep_opts.g_opt = sweep_cmd->get_option("--g");
  sweep_cmd
      ->add_option("--backend", sweep_opts.common.backend,
                   "evaluation route: numeric or closed")
      ->transform(CLI::CheckedTransformer(backend_map()));

  CommonOpts trace_opts;
  CLI::App* trace_cmd = app.add_subcommand(
      "trace", "Bell quantity B(t) for one scenario on a time grid");
  add_common(trace_cmd, trace_opts, 0.0, "y+");
  trace_opts.preset_opt = trace_cmd->add_option(
      "--preset", trace_opts.preset, "named scenario (see list in README)");
  trace_cmd
      ->add_option("--backend", trace_opts.backend,
                   "evaluation route: numeric or closed")
      ->transform(CLI::CheckedTransformer(backend_map()));

  CircuitOpts circuit_opts;
  CLI::App* circuit_cmd = app.add_subcommand(
      "circuit", "three-qubit ancilla-recording protocol emulation");
  add_common(circuit_cmd, circuit_opts.common, 0.0, "z+");
  circuit_opts.common.preset_opt =
      circuit_cmd->add_option("--preset", circuit_opts.common.preset,
                              "named scenario (see list in README)");
  circuit_cmd->add_option("--prep-theta", circuit_opts.prep_theta_deg,
                          "mediator preparation pulse angle, degrees")
      ->capture_default_str();
  circuit_cmd->add_option("--prep-phi", circuit_opts.prep_phi_deg,
                          "preparation pulse axis angle, degrees")
      ->capture_default_str();
  circuit_cmd->add_option("--damping", circuit_opts.damping,
                          "per-pulse-stage contraction factor in [0, 1]")
      ->capture_default_str();
  circuit_opts.t_opt = circuit_cmd->add_option(
      "-t,--t", circuit_opts.t_single, "single mixing time (replaces the grid)");
  circuit_opts.basis1_opt =
      circuit_cmd->add_option("--basis1", circuit_opts.basis1,
                              "early recording basis (z or x); single-pair mode")
          ->transform(CLI::CheckedTransformer(basis_map()));
  circuit_opts.basis2_opt =
      circuit_cmd->add_option("--basis2", circuit_opts.basis2,
                              "late recording basis (z or x); single-pair mode")
          ->transform(CLI::CheckedTransformer(basis_map()));

  VerifyOpts verify_opts;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run the randomized self-verification suites");
  verify_cmd->add_option("--seed", verify_opts.seed, "random seed")
      ->capture_default_str();
  verify_opts.tol_opt = verify_cmd->add_option(
      "-t,--tolerance", verify_opts.tolerance,
      "absolute tolerance override applied to every suite");
  verify_cmd->add_option("-o,--out", verify_opts.out,
                         "also write the JSON report to this path");
  verify_cmd->add_option("--config", verify_opts.config_file,
                         "read defaults from a flat key = value file "
                         "(explicit flags win)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sweep_cmd->parsed()) {
      load_config(sweep_cmd, sweep_opts.common.config_file);
      return cmd_sweep(sweep_opts);
    }
    if (trace_cmd->parsed()) {
      load_config(trace_cmd, trace_opts.config_file);
      return cmd_trace(trace_opts);
    }
    if (circuit_cmd->parsed()) {
      load_config(circuit_cmd, circuit_opts.common.config_file);
      return cmd_circuit(circuit_opts);
    }
    if (verify_cmd->parsed()) {
      load_config(verify_cmd, verify_opts.config_file);
      return cmd_verify(verify_opts);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;  // unreachable with require_subcommand(1)
}
