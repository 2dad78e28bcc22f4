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

#include <cstdint>
#include <string>
#include <vector>

#include "discord/parallel.hpp"
#include "discord/xstate.hpp"

namespace discord {

struct SuiteResult {
  std::string name;
  int cases = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct ValidationOptions {
  int states = 1000;
  std::uint64_t seed = 1;
  /// Replaces the Pauli basis with a slightly perturbed matrix in the filter
  /// invariance suite. Negative control: that suite must then fail.
  bool corrupt_basis = false;
  Exec exec = Exec::parallel;
};

/// Deterministic per-case seed.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t attempt = 0);

/// A random X state whose Pauli matrix is invertible and whose ellipsoid has
/// vertical extent, drawn from case_seed(seed, index, attempt) for the first
/// attempt that qualifies.
XState random_regular_xstate(std::uint64_t seed, std::uint64_t index);

SuiteResult filter_invariance_suite(const ValidationOptions& opts);
SuiteResult chi_four_identity_suite(const ValidationOptions& opts);
SuiteResult completeness_suite(const ValidationOptions& opts);
SuiteResult recovery_suite(const ValidationOptions& opts);
SuiteResult evolution_shortcut_suite(const ValidationOptions& opts);

std::vector<SuiteResult> run_validation(const ValidationOptions& opts);

}  // namespace discord
