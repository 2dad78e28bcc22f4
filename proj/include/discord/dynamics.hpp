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

#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "discord/correlations.hpp"
#include "discord/parallel.hpp"
#include "discord/xstate.hpp"

namespace discord {

/// Two-sided phase damping with gamma(t) = exp(-rate t).
struct DampingSpec {
  double rate = 0.0;
  std::vector<double> times;

  /// n points on [0, t_max], uniform or (log_spacing) geometric in t + t_max/1000.
  static DampingSpec uniform(double rate, double t_max, int n, bool log_spacing = false);

  /// Throws InvalidArgument unless rate >= 0 and times are non-negative and
  /// strictly increasing.
  void check() const;
  double gamma_at(double t) const;
};

/// K1 = diag(1, gamma), K2 = diag(0, sqrt(1 - gamma^2)). Throws GammaOutOfRange.
std::pair<CMat2, CMat2> phase_damp_kraus(double gamma);

/// sum_{i,j} (K_i (x) K_j) rho (K_i (x) K_j)^dagger
CMat4 evolve_kraus(const CMat4& rho, double gamma);

/// Same channel on an X state: populations fixed, u and v scaled by gamma^2.
XState evolve_two_sided(const XState& x, double gamma);

struct TrajectoryPoint {
  double t = 0.0;
  double gamma = 1.0;
  double chi_h = 0.0;
  double chi_v = 0.0;
  double c_hv = 0.0;
  double c_three = 0.0;
  double margin = 0.0;  // c_three - c_hv
  std::vector<CorrelationReport> reports;
};

struct Trajectory {
  XState initial;
  DampingSpec spec;
  std::vector<TrajectoryPoint> points;
};

/// Evaluates every time point independently. c_hv, c_three and margin are
/// always filled; `reports` holds one CorrelationReport per requested strategy.
Trajectory correlation_trajectory(const XState& x, const DampingSpec& spec,
                                  const std::vector<Strategy>& strategies = {},
                                  const BruteForceOptions& brute = {},
                                  Exec exec = Exec::parallel);

/// Single time point of a trajectory.
TrajectoryPoint trajectory_point(const XState& x, double rate, double t);

enum class TransitionKind { none, sudden, smooth };
std::string_view to_string(TransitionKind k);

struct TransitionOptions {
  double threshold = 1e-9;
  int window_steps = 5;
  int window_samples = 64;
  Exec exec = Exec::parallel;
};

struct TransitionReport {
  TransitionKind kind = TransitionKind::none;
  std::optional<double> t_bar;
  double window_lo = 0.0;
  double window_hi = 0.0;
  double max_margin = 0.0;
  /// (t, c_three - c_hv) samples over the window, t increasing.
  std::vector<std::pair<double, double>> margin_curve;
};

/// Locates the time where chi_h falls to chi_v by bisection, then samples
/// c_three - c_hv over t_bar +- window_steps grid steps (grid points in the
/// window, t_bar itself, and window_samples uniform points). Sudden when the
/// largest sample is within threshold.
TransitionReport detect_transition(const Trajectory& traj, const TransitionOptions& opts = {});

}  // namespace discord
