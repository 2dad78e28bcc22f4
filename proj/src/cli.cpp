// Copyright 2026 The discord-kit Authors
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

#include "discord/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "discord/correlations.hpp"
#include "discord/dynamics.hpp"
#include "discord/error.hpp"
#include "discord/io.hpp"
#include "discord/steering.hpp"
#include "discord/validation.hpp"

namespace discord {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StateInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StateSource {
  std::string inline_text;
  std::string file;
};

void add_state_options(CLI::App* cmd, StateSource& src) {
  auto* s = cmd->add_option("--state", src.inline_text, "State as a,b,c,d,u,v");
  auto* f = cmd->add_option("--state-file", src.file, "JSON file with keys a,b,c,d,u,v");
  s->excludes(f);
  f->excludes(s);
}

XState load_state(const StateSource& src) {
  if (src.inline_text.empty() == src.file.empty()) {
    throw UsageError("exactly one of --state or --state-file is required");
  }
  try {
    return src.file.empty() ? parse_state_list(src.inline_text) : read_state_file(src.file);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidArgument) throw;
    throw StateInputError(e.what());
  }
}

std::vector<Strategy> parse_strategies(const std::string& list) {
  std::vector<Strategy> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      const Strategy s = parse_strategy(item);
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  if (out.empty()) throw UsageError("--strategies must name at least one of hv,three,brute");
  return out;
}

void check_grid(int grid) {
  if (grid < 8) throw UsageError("--grid must be at least 8");
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotNormalized:
    case ErrorCode::NegativeParameter:
    case ErrorCode::PositivityViolation:
    case ErrorCode::NonHermitianInput:
    case ErrorCode::UnphysicalState:
      return kExitState;
    default:
      return kExitPrecondition;
  }
}

// Writes body to --out (or out); the footer goes beside it, or to err.
void emit(const std::string& path, const std::string& body, const Json* footer,
          std::ostream& out, std::ostream& err) {
  if (path.empty() || path == "-") {
    out << body;
    if (footer) err << footer->dump(2) << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open output file " + path);
  file << body;
  if (footer) {
    std::ofstream foot(path + ".footer.json");
    if (!foot) throw UsageError("cannot open output file " + path + ".footer.json");
    foot << footer->dump(2) << '\n';
  }
}

struct Common {
  StateSource state;
  std::string out_path;
  std::string strategies = "hv,three";
  std::uint64_t seed = 0;
  int restarts = 200;
};

int cmd_analyze(const Common& c, std::ostream& out, std::ostream& err) {
  const XState x = load_state(c.state);
  const auto strategies = parse_strategies(c.strategies);
  BruteForceOptions brute;
  brute.seed = c.seed;
  brute.restarts = c.restarts;

  Json j;
  j["state"] = to_json(x);
  try {
    j["ellipsoid"] = to_json(ellipsoid_params(x));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateMarginal) throw;
    j["ellipsoid"] = nullptr;
  }
  j["mutual_info"] = round12(mutual_information(x));
  Json reports = Json::object();
  for (Strategy s : strategies) {
    reports[std::string(to_string(s))] = to_json(classical_correlation(x, s, brute));
  }
  j["strategies"] = reports;
  emit(c.out_path, j.dump(2) + "\n", nullptr, out, err);
  return kExitOk;
}

int cmd_filter_sweep(const Common& c, int grid, std::ostream& out, std::ostream& err) {
  check_grid(grid);
  const XState x = load_state(c.state);
  const FilterFamily fam(x);
  ChiCurveOptions opts;
  opts.grid = grid;
  const auto pts = chi_curves(x, opts);

  const Crossing crossing = find_crossing(x, grid);
  Json footer;
  footer["crossing"] = to_json(crossing);
  if (crossing.kind == CrossingKind::point || crossing.kind == CrossingKind::degenerate) {
    footer["tangent_interval"] = to_json(tangent_interval(x, grid));
  } else {
    footer["tangent_interval"] = nullptr;
  }
  footer["monotone"] = fam.is_monotone();

  std::ostringstream body;
  write_curves_csv(body, pts);
  emit(c.out_path, body.str(), &footer, out, err);
  return kExitOk;
}

struct DampArgs {
  std::optional<double> rate;
  std::optional<double> t_max;
  int grid = 200;
  bool log_time = false;
};

int cmd_damp_sweep(const Common& c, const DampArgs& d, std::ostream& out, std::ostream& err) {
  check_grid(d.grid);
  if (!d.rate) throw UsageError("--gamma-rate is required");
  const XState x = load_state(c.state);
  if (*d.rate < 0.0 || !std::isfinite(*d.rate)) {
    throw Error(ErrorCode::InvalidArgument, "gamma rate must be non-negative");
  }
  double t_max = 0.0;
  if (d.t_max) {
    t_max = *d.t_max;
  } else if (*d.rate > 0.0) {
    t_max = 5.0 / *d.rate;
  } else {
    throw UsageError("--t-max is required when --gamma-rate is 0");
  }
  const DampingSpec spec = DampingSpec::uniform(*d.rate, t_max, d.grid, d.log_time);

  std::vector<Strategy> extra;
  for (Strategy s : parse_strategies(c.strategies)) {
    if (s == Strategy::brute) extra.push_back(s);
  }
  BruteForceOptions brute;
  brute.seed = c.seed;
  brute.restarts = c.restarts;
  const Trajectory traj = correlation_trajectory(x, spec, extra, brute);

  Json footer;
  footer["transition"] = to_json(detect_transition(traj));
  if (!extra.empty()) {
    Json cb = Json::array();
    for (const auto& p : traj.points) cb.push_back(round12(p.reports.front().classical));
    footer["c_brute"] = cb;
  }
  std::ostringstream body;
  write_trajectory_csv(body, traj);
  emit(c.out_path, body.str(), &footer, out, err);
  return kExitOk;
}

int cmd_validate(int states, std::uint64_t seed, const std::string& fault,
                 std::ostream& out) {
  if (states < 1) throw UsageError("--states must be positive");
  ValidationOptions opts;
  opts.states = states;
  opts.seed = seed;
  if (fault == "upsilon") {
    opts.corrupt_basis = true;
  } else if (!fault.empty()) {
    throw UsageError("unknown fault '" + fault + "'");
  }
  bool all = true;
  const auto t0 = std::chrono::steady_clock::now();
  for (const SuiteResult& r : run_validation(opts)) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases
        << " max_residual=" << format_double(r.max_residual)
        << " tolerance=" << format_double(r.tolerance) << '\n';
    all = all && r.passed;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out << (all ? "all suites passed" : "suite failure") << " in " << format_double(secs)
      << " s\n";
  return all ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classical correlation and discord of two-qubit X states", "discord-kit"};
  app.require_subcommand(1);

  Common common;
  int grid = 512;
  DampArgs damp;
  int states = 1000;
  std::uint64_t vseed = 1;
  std::string fault;

  auto* analyze = app.add_subcommand("analyze", "Ellipsoid, mutual information and correlations");
  add_state_options(analyze, common.state);
  analyze->add_option("--strategies", common.strategies, "Comma list of hv,three,brute");
  analyze->add_option("--out", common.out_path, "Output path (default stdout)");
  analyze->add_option("--seed", common.seed, "Brute-force seed");
  analyze->add_option("--restarts", common.restarts, "Brute-force restarts")
      ->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("filter-sweep", "Holevo curves along the filter family");
  add_state_options(sweep, common.state);
  sweep->add_option("--grid", grid, "Number of interior z samples (>= 8)");
  sweep->add_option("--out", common.out_path, "CSV path; footer goes to PATH.footer.json");

  auto* dsweep = app.add_subcommand("damp-sweep", "Two-sided phase damping trajectory");
  add_state_options(dsweep, common.state);
  dsweep->add_option("--gamma-rate", damp.rate, "Phase damping rate");
  dsweep->add_option("--t-max", damp.t_max, "Final time (default 5/rate)");
  dsweep->add_option("--grid", damp.grid, "Number of time points (>= 8)");
  dsweep->add_flag("--log-time", damp.log_time, "Log-spaced time grid");
  dsweep->add_option("--strategies", common.strategies, "Add brute to report C_brute");
  dsweep->add_option("--out", common.out_path, "CSV path; footer goes to PATH.footer.json");
  dsweep->add_option("--seed", common.seed, "Brute-force seed");
  dsweep->add_option("--restarts", common.restarts, "Brute-force restarts")
      ->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Seeded invariant suites");
  validate->add_option("--states", states, "Cases per suite");
  validate->add_option("--seed", vseed, "Seed");
  validate->add_option("--inject-fault", fault, "Negative control")->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(common, out, err);
    if (*sweep) return cmd_filter_sweep(common, grid, out, err);
    if (*dsweep) return cmd_damp_sweep(common, damp, out, err);
    return cmd_validate(states, vseed, fault, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StateInputError& e) {
    err << e.what() << '\n';
    return kExitState;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace discord
