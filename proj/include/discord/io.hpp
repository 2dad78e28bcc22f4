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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "discord/correlations.hpp"
#include "discord/dynamics.hpp"
#include "discord/steering.hpp"
#include "discord/xstate.hpp"

namespace discord {

using Json = nlohmann::json;

/// 12 significant digits.
std::string format_double(double x);
/// x rounded to 12 significant digits, so JSON output matches the CSV text.
double round12(double x);

Json to_json(const XState& x);
/// Flat object with keys a, b, c, d, u, v. The result is validated.
XState xstate_from_json(const Json& j);
XState read_state_file(const std::string& path);
/// "a,b,c,d,u,v". Throws InvalidArgument when the text is malformed; the
/// values are then validated.
XState parse_state_list(std::string_view text);

Json to_json(const SteeringEllipsoid& e);
Json povm_to_json(const std::vector<PovmElement>& elements);
Json to_json(const CorrelationReport& r);
Json to_json(const Crossing& c);
Json to_json(const TangentInterval& t);
Json to_json(const TransitionReport& t);

inline constexpr std::string_view kCurveCsvHeader = "xi,z,chi_h,chi_v,chi_3";
inline constexpr std::string_view kTrajectoryCsvHeader = "t,gamma,chi_h,chi_v,C_hv,C_three,margin";

void write_curves_csv(std::ostream& os, const std::vector<ChiCurvePoint>& pts);
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

}  // namespace discord
