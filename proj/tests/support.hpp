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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "discord/measurement.hpp"
#include "discord/numerics.hpp"
#include "discord/xstate.hpp"
#include "oracles.hpp"

namespace testing {

inline constexpr discord::XState kSample{0.4875, 0.1625, 0.0875, 0.2625, 0.3354, 0.1118};
// z0 = 0 (ab = cd) with the horizontal measurement initially optimal.
inline constexpr discord::XState kCentered{0.45, 0.1, 0.15, 0.3, 0.3, 0.1};
inline constexpr discord::XState kBell{0.5, 0.0, 0.0, 0.5, 0.5, 0.0};

inline oracle::M4 to_oracle(const discord::CMat4& m) {
  oracle::M4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = m(i, j);
  return out;
}

inline oracle::M4 to_oracle(const discord::XState& x) {
  return oracle::x_density(x.a, x.b, x.c, x.d, x.u, x.v);
}

inline std::vector<oracle::Element> to_oracle(const std::vector<discord::PovmElement>& els) {
  std::vector<oracle::Element> out;
  for (const auto& e : els) out.push_back({e.alpha, e.m.x(), e.m.y(), e.m.z()});
  return out;
}

/// A random full-rank 4x4 density matrix (not of X form).
inline discord::CMat4 random_density(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  discord::CMat4 g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = {n(gen), n(gen)};
  discord::CMat4 rho = g * g.adjoint();
  return rho / rho.trace().real();
}

inline double max_abs_diff(const discord::XState& x, const discord::XState& y) {
  return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b), std::abs(x.c - y.c),
                   std::abs(x.d - y.d), std::abs(x.u - y.u), std::abs(x.v - y.v)});
}

}  // namespace testing
