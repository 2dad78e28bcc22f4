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

// Release gate: one line per acceptance criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "discord/correlations.hpp"
#include "discord/dynamics.hpp"
#include "discord/measurement.hpp"
#include "discord/steering.hpp"
#include "discord/validation.hpp"
#include "support.hpp"

using namespace discord;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome ellipsoid_reproduction() {
  const XState x = testing::kSample;
  // Hand arithmetic on the closed-form axes.
  const double p = (x.a + x.c) * (x.b + x.d);
  const double ref[4] = {(x.u + x.v) / std::sqrt(p), (x.u - x.v) / std::sqrt(p),
                         (x.a * x.d - x.b * x.c) / p, (x.a * x.b - x.c * x.d) / p};
  const double quoted[4] = {0.904633, 0.452316, 0.465479, 0.230179};

  constexpr int kReps = 1000;
  SteeringEllipsoid e{};
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < kReps; ++i) e = ellipsoid_params(x);
  const double per_call =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / kReps;

  const double got[4] = {e.l1, e.l2, e.l3, e.z0};
  double dev = 0.0, dev_quoted = 0.0;
  for (int k = 0; k < 4; ++k) {
    dev = std::max(dev, std::abs(got[k] - ref[k]));
    dev_quoted = std::max(dev_quoted, std::abs(got[k] - quoted[k]));
  }
  return {dev < 1e-4 && dev_quoted < 1e-4 && per_call < 1e-3,
          fmt("l=(%.6f, %.6f, %.6f) z0=%.6f, dev %.2e, dev from quoted %.2e, %.2e s/call", e.l1,
              e.l2, e.l3, e.z0, dev, dev_quoted, per_call)};
}

Outcome exact_anchors() {
  BruteForceOptions brute;
  double worst = 0.0;
  for (Strategy s : {Strategy::hv, Strategy::three, Strategy::brute}) {
    const auto bell = classical_correlation(testing::kBell, s, brute);
    worst = std::max({worst, std::abs(bell.mutual_info - 2.0), std::abs(bell.classical - 1.0),
                      std::abs(bell.discord - 1.0)});
    const auto cls = classical_correlation({0.4, 0.1, 0.2, 0.3, 0.0, 0.0}, s, brute);
    worst = std::max(worst, std::abs(cls.discord));
    const auto mixed = classical_correlation(XState{}, s, brute);
    worst = std::max({worst, std::abs(mixed.mutual_info), std::abs(mixed.classical),
                      std::abs(mixed.discord)});
  }
  return {worst < 1e-9, fmt("max anchor error %.2e over hv, three, brute", worst)};
}

Outcome from_suite(const SuiteResult& r) {
  return {r.passed && r.cases == 1000,
          fmt("%d cases, max residual %.2e (tol %.0e)", r.cases, r.max_residual, r.tolerance)};
}

Outcome endpoint_limits() {
  double worst = 0.0;
  std::vector<XState> states{testing::kSample, testing::kCentered};
  for (std::uint64_t s = 0; s < 20; ++s) states.push_back(random_xstate(s));
  for (const XState& x : states) {
    const FilterFamily fam(x);
    for (double xi : {1e-6, 1.0 - 1e-6}) {
      const VonNeumannChi c = chi_hv(to_pauli_rep(to_density(fam.state_at(xi))));
      worst = std::max({worst, c.horizontal, c.vertical});
    }
  }
  return {worst < 1e-4, fmt("max chi at xi=1e-6, 1-1e-6 over %zu states: %.2e", states.size(), worst)};
}

Outcome strategy_dominance() {
  constexpr int kStates = 500;
  struct Row {
    double three_minus_hv;
    double brute_minus_three;
  };
  BruteForceOptions brute;  // 200 restarts, up to four elements
  brute.exec = Exec::serial;
  const auto rows = map_indices<Row>(Exec::parallel, kStates, [&](std::size_t k) {
    const XState x = random_xstate(700000 + k);
    const RMat r = to_pauli_rep(to_density(x));
    const double hv = chi_hv(r).best();
    const double three = optimize_three(r).chi;
    BruteForceOptions b = brute;
    b.seed = 1000 * k;
    const double bf = brute_force_optimize(r, b).chi;
    return Row{three - hv, bf - three};
  });
  double worst_order = 0.0, worst_gap = -1.0;
  int close = 0;
  for (const Row& r : rows) {
    worst_order = std::min(worst_order, r.three_minus_hv);
    worst_gap = std::max(worst_gap, r.brute_minus_three);
    if (r.brute_minus_three < 1e-5) ++close;
  }
  const double frac = static_cast<double>(close) / kStates;
  return {worst_order >= -1e-12 && frac >= 0.99,
          fmt("min(C_three - C_hv) %.2e, brute within 1e-5 of three in %.1f%% (max excess %.2e)",
              worst_order, 100.0 * frac, worst_gap)};
}

Outcome damped_trajectory_comparison() {
  const Trajectory traj =
      correlation_trajectory(testing::kSample, DampingSpec::uniform(0.01, 400.0, 200));
  double min_margin = 1.0;
  for (const auto& p : traj.points) min_margin = std::min(min_margin, p.margin);
  const TransitionReport r = detect_transition(traj);
  double window_excess = 0.0;
  for (const auto& [t, m] : r.margin_curve) window_excess = std::max(window_excess, m);
  const bool ok = min_margin >= -1e-12 && window_excess > 1e-4 &&
                  r.kind == TransitionKind::smooth;
  return {ok, fmt("t_bar %.4f, min margin %.2e, max excess near t_bar %.3e bits (need > 1e-4), "
                  "kind %s",
                  r.t_bar.value_or(-1.0), min_margin, window_excess,
                  std::string(to_string(r.kind)).c_str())};
}

Outcome centered_case() {
  const XState x0 = testing::kCentered;
  const SteeringEllipsoid e = ellipsoid_params(x0);
  const XState x = evolve_two_sided(x0, std::sqrt(e.l3 / e.l1));
  double worst = 0.0;
  for (const auto& p : chi_curves(x, {1024, false, Exec::parallel})) {
    worst = std::max(worst, std::abs(p.chi_h - p.chi_v));
  }
  const Trajectory traj = correlation_trajectory(x0, DampingSpec::uniform(0.01, 100.0, 200));
  const TransitionReport r = detect_transition(traj);
  return {worst < 1e-8 && r.kind == TransitionKind::sudden,
          fmt("z0 %.1e, max |chi_h - chi_v| %.2e, kind %s, max margin %.2e", e.z0, worst,
              std::string(to_string(r.kind)).c_str(), r.max_margin)};
}

}  // namespace

int main() {
  ValidationOptions v;
  v.states = 1000;
  v.seed = 20260101;

  const std::vector<Criterion> criteria = {
      {1, "ellipsoid reproduction", 1.0, ellipsoid_reproduction},
      {2, "exact anchors", 1.0, exact_anchors},
      {3, "filter invariance suite", 30.0, [&] { return from_suite(filter_invariance_suite(v)); }},
      {4, "recovery point", 10.0, [&] { return from_suite(recovery_suite(v)); }},
      {5, "chi4 identity", 30.0, [&] { return from_suite(chi_four_identity_suite(v)); }},
      {6, "endpoint limits", 10.0, endpoint_limits},
      {7, "strategy dominance", 600.0, strategy_dominance},
      {8, "damped trajectory comparison", 120.0, damped_trajectory_comparison},
      {9, "centered circular case", 60.0, centered_case},
      {10, "evolution shortcut", 10.0, [&] { return from_suite(evolution_shortcut_suite(v)); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_s;
    const bool passed = o.passed && in_time;
    if (!passed) ++failures;
    std::printf("criterion %2d %s  %-30s %s; %.3f s (budget %.0f s)\n", c.id,
                passed ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs, c.budget_s);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
