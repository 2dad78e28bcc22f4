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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <atomic>
#include <cstring>
#include <stdexcept>

#include "discord/correlations.hpp"
#include "discord/dynamics.hpp"
#include "discord/parallel.hpp"
#include "discord/validation.hpp"
#include "support.hpp"

using namespace discord;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("thread limit honours the environment") {
  // ctest runs this binary with DISCORD_KIT_THREADS=4.
  if (std::getenv("DISCORD_KIT_THREADS")) CHECK(thread_limit() == 4);
  CHECK(thread_limit() >= 1);
}

TEST_CASE("map_indices keeps index order") {
  const auto v = map_indices<int>(Exec::parallel, 1000, [](std::size_t i) { return int(i * i); });
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == int(i * i));
}

TEST_CASE("for_each_index visits each index once and rethrows") {
  std::vector<std::atomic<int>> hits(500);
  for_each_index(Exec::parallel, hits.size(), [&](std::size_t i) { ++hits[i]; });
  for (const auto& h : hits) CHECK(h.load() == 1);
  CHECK_THROWS_AS(for_each_index(Exec::parallel, 100,
                                 [](std::size_t i) {
                                   if (i == 37) throw std::runtime_error("boom");
                                 }),
                  std::runtime_error);
}

TEST_CASE("chi curves are bitwise identical serial and parallel") {
  const auto a = chi_curves(testing::kSample, {300, true, Exec::serial});
  const auto b = chi_curves(testing::kSample, {300, true, Exec::parallel});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(same_bits(a[i].z, b[i].z));
    CHECK(same_bits(a[i].chi_h, b[i].chi_h));
    CHECK(same_bits(a[i].chi_v, b[i].chi_v));
    CHECK(same_bits(a[i].chi_3, b[i].chi_3));
  }
  const Crossing cs = find_crossing(testing::kCentered, 128, Exec::serial);
  const Crossing cp = find_crossing(testing::kCentered, 128, Exec::parallel);
  CHECK(cs.kind == cp.kind);
  CHECK(same_bits(cs.z_bar, cp.z_bar));
}

TEST_CASE("trajectories are bitwise identical serial and parallel") {
  const DampingSpec spec = DampingSpec::uniform(0.01, 400.0, 60);
  BruteForceOptions brute;
  brute.restarts = 8;
  const auto a = correlation_trajectory(testing::kSample, spec, {Strategy::brute}, brute, Exec::serial);
  const auto b = correlation_trajectory(testing::kSample, spec, {Strategy::brute}, brute, Exec::parallel);
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(same_bits(a.points[i].c_hv, b.points[i].c_hv));
    CHECK(same_bits(a.points[i].c_three, b.points[i].c_three));
    CHECK(same_bits(a.points[i].reports[0].classical, b.points[i].reports[0].classical));
  }
  TransitionOptions so;
  so.exec = Exec::serial;
  TransitionOptions po;
  po.exec = Exec::parallel;
  const auto rs = detect_transition(a, so);
  const auto rp = detect_transition(a, po);
  CHECK(rs.kind == rp.kind);
  CHECK(same_bits(rs.max_margin, rp.max_margin));
}

TEST_CASE("brute force is bitwise identical serial and parallel") {
  BruteForceOptions s;
  s.restarts = 30;
  s.seed = 9;
  s.exec = Exec::serial;
  BruteForceOptions p = s;
  p.exec = Exec::parallel;
  const RMat r = to_pauli_rep(to_density(testing::kSample));
  const auto a = brute_force_optimize(r, s);
  const auto b = brute_force_optimize(r, p);
  CHECK(same_bits(a.chi, b.chi));
  CHECK(a.restart == b.restart);
}

TEST_CASE("validation suites agree serial and parallel") {
  ValidationOptions s;
  s.states = 200;
  s.exec = Exec::serial;
  ValidationOptions p = s;
  p.exec = Exec::parallel;
  const auto a = run_validation(s);
  const auto b = run_validation(p);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(same_bits(a[i].max_residual, b[i].max_residual));
    CHECK(a[i].passed);
  }
}
