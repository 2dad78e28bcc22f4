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

#include "discord/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "discord/error.hpp"

namespace discord {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) { return std::strtod(format_double(x).c_str(), nullptr); }

Json to_json(const XState& x) {
  return Json{{"a", round12(x.a)}, {"b", round12(x.b)}, {"c", round12(x.c)},
              {"d", round12(x.d)}, {"u", round12(x.u)}, {"v", round12(x.v)}};
}

XState xstate_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "state JSON must be an object");
  double p[6];
  const char* keys[6] = {"a", "b", "c", "d", "u", "v"};
  for (int k = 0; k < 6; ++k) {
    if (!j.contains(keys[k]) || !j.at(keys[k]).is_number()) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string("state JSON needs numeric key '") + keys[k] + "'");
    }
    p[k] = j.at(keys[k]).get<double>();
  }
  return validate(p[0], p[1], p[2], p[3], p[4], p[5]);
}

XState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open state file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad state file: ") + e.what());
  }
  return xstate_from_json(j);
}

XState parse_state_list(std::string_view text) {
  std::vector<double> vals;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string tok(text.substr(start, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - start));
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (tok.empty() || end == tok.c_str() || *end != '\0') {
      throw Error(ErrorCode::InvalidArgument, "malformed state list '" + std::string(text) + "'");
    }
    vals.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (vals.size() != 6) {
    throw Error(ErrorCode::InvalidArgument, "state list needs six values a,b,c,d,u,v");
  }
  return validate(vals[0], vals[1], vals[2], vals[3], vals[4], vals[5]);
}

Json to_json(const SteeringEllipsoid& e) {
  return Json{{"l1", round12(e.l1)}, {"l2", round12(e.l2)},
              {"l3", round12(e.l3)}, {"z0", round12(e.z0)}};
}

Json povm_to_json(const std::vector<PovmElement>& elements) {
  Json arr = Json::array();
  for (const auto& el : elements) {
    arr.push_back({{"alpha", round12(el.alpha)},
                   {"mx", round12(el.m.x())},
                   {"my", round12(el.m.y())},
                   {"mz", round12(el.m.z())}});
  }
  return arr;
}

Json to_json(const CorrelationReport& r) {
  Json j{{"strategy", std::string(to_string(r.strategy))},
         {"mutual_info", round12(r.mutual_info)},
         {"classical", round12(r.classical)},
         {"discord", round12(r.discord)},
         {"povm", povm_to_json(r.povm)}};
  if (r.theta) j["theta"] = round12(*r.theta);
  if (r.apex) j["apex"] = std::string(to_string(*r.apex));
  return j;
}

Json to_json(const Crossing& c) {
  Json roots = Json::array();
  for (double z : c.roots) roots.push_back(round12(z));
  Json j{{"kind", std::string(to_string(c.kind))}, {"roots", roots}};
  j["z_bar"] = c.kind == CrossingKind::point ? Json(round12(c.z_bar)) : Json(nullptr);
  return j;
}

Json to_json(const TangentInterval& t) {
  if (!t.exists) return Json{{"exists", false}};
  return Json{{"exists", true},
              {"z_bar", round12(t.z_bar)},
              {"z1", round12(t.z1)},
              {"z2", round12(t.z2)}};
}

Json to_json(const TransitionReport& t) {
  Json curve = Json::array();
  for (const auto& [time, margin] : t.margin_curve) {
    curve.push_back({round12(time), round12(margin)});
  }
  Json j{{"kind", std::string(to_string(t.kind))},
         {"t_bar", t.t_bar ? Json(round12(*t.t_bar)) : Json(nullptr)},
         {"max_margin", round12(t.max_margin)},
         {"margin_curve", curve}};
  if (t.t_bar) {
    j["window"] = {round12(t.window_lo), round12(t.window_hi)};
  }
  return j;
}

void write_curves_csv(std::ostream& os, const std::vector<ChiCurvePoint>& pts) {
  os << kCurveCsvHeader << '\n';
  for (const auto& p : pts) {
    os << format_double(p.xi) << ',' << format_double(p.z) << ','
       << format_double(p.chi_h) << ',' << format_double(p.chi_v) << ','
       << format_double(p.chi_3) << '\n';
  }
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << kTrajectoryCsvHeader << '\n';
  for (const auto& p : traj.points) {
    os << format_double(p.t) << ',' << format_double(p.gamma) << ','
       << format_double(p.chi_h) << ',' << format_double(p.chi_v) << ','
       << format_double(p.c_hv) << ',' << format_double(p.c_three) << ','
       << format_double(p.margin) << '\n';
  }
}

}  // namespace discord
