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
#include <vector>

#include "discord/measurement.hpp"
#include "discord/parallel.hpp"
#include "discord/steering.hpp"
#include "discord/xstate.hpp"

namespace discord {

/// How the maximization over measurements on B is carried out.
enum class Strategy {
  hv,     // best of sigma_x and sigma_z
  three,  // three-element family, both apexes
  brute,  // randomized search over all POVMs with up to four elements
};

std::string_view to_string(Strategy s);
/// Accepts "hv", "three", "brute" and the report tags.
Strategy parse_strategy(std::string_view name);

struct CorrelationReport {
  double mutual_info = 0.0;
  double classical = 0.0;
  double discord = 0.0;
  Strategy strategy = Strategy::hv;
  std::optional<double> theta;
  std::optional<Apex> apex;
  std::vector<PovmElement> povm;
};

/// S(rho_A) + S(rho_B) - S(rho_AB), in bits.
double mutual_information(const XState& x);

CorrelationReport classical_correlation(const XState& x, Strategy strategy,
                                        const BruteForceOptions& brute = {});

/// One row of the filter-family sweep.
struct ChiCurvePoint {
  double xi = 0.0;
  double z = 0.0;
  double chi_h = 0.0;
  double chi_v = 0.0;
  double chi_3 = 0.0;
};

struct ChiCurveOptions {
  int grid = 512;
  bool with_three = true;
  Exec exec = Exec::parallel;
};

/// Holevo quantities of the filter family on a uniform z grid strictly inside
/// the apex interval, ordered by increasing z.
std::vector<ChiCurvePoint> chi_curves(const XState& x, const ChiCurveOptions& opts = {});

/// chi_h and chi_v of the family member whose reduced state sits at z.
VonNeumannChi chi_at_z(const FilterFamily& fam, double z);

enum class CrossingKind {
  none,        // no interior sign change of chi_h - chi_v
  point,       // exactly one crossing, z_bar
  degenerate,  // chi_h == chi_v along the whole family
  multiple,    // more than one crossing; all listed in roots
};

std::string_view to_string(CrossingKind k);

struct Crossing {
  CrossingKind kind = CrossingKind::none;
  double z_bar = 0.0;
  std::vector<double> roots;
};

inline constexpr double kDegenerateCurveTol = 1e-10;

/// Sign changes of chi_h - chi_v on the grid, each refined by bisection to
/// 1e-10 in z.
Crossing find_crossing(const XState& x, int grid = 512, Exec exec = Exec::parallel);

struct TangentInterval {
  bool exists = false;
  double z_bar = 0.0;
  double z1 = 0.0;
  double z2 = 0.0;
};

/// Bridging segment of the concave upper envelope of max(chi_h, chi_v)
/// around the crossing. Located on successively zoomed grids, then polished
/// by alternating one-dimensional searches for the common tangent. A
/// degenerate crossing yields exists = false. Throws NoCrossing when the
/// curves do not cross exactly once.
TangentInterval tangent_interval(const XState& x, int grid = 512,
                                 Exec exec = Exec::parallel);

}  // namespace discord
