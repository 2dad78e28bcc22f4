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

#include "discord/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "discord/dynamics.hpp"
#include "discord/error.hpp"
#include "discord/measurement.hpp"
#include "discord/steering.hpp"

namespace discord {

namespace {

double max_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

SuiteResult finish(std::string name, const std::vector<double>& residuals, double tol) {
  SuiteResult r;
  r.name = std::move(name);
  r.cases = static_cast<int>(residuals.size());
  r.max_residual = max_of(residuals);
  r.tolerance = tol;
  r.passed = std::all_of(residuals.begin(), residuals.end(),
                         [tol](double x) { return std::isfinite(x) && x < tol; });
  return r;
}

CMat4 corrupted_basis() {
  CMat4 b = upsilon();
  b(0, 1) += 0.05;
  b(3, 2) -= 0.03;
  return b;
}

}  // namespace

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t attempt) {
  // splitmix64 over the packed triple
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + index * 0xBF58476D1CE4E5B9ULL +
                    attempt * 0x94D049BB133111EBULL + 0x2545F4914F6CDD1DULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

XState random_regular_xstate(std::uint64_t seed, std::uint64_t index) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    const XState x = random_xstate(case_seed(seed, index, attempt));
    if (!(x.a + x.c > 1e-6 && x.b + x.d > 1e-6)) continue;
    if (!(ellipsoid_params(x).l3 > 1e-9)) continue;
    if (!(std::abs(to_pauli_rep(to_density(x)).determinant()) >= 1e-9)) continue;
    return x;
  }
}

SuiteResult filter_invariance_suite(const ValidationOptions& opts) {
  const CMat4 basis = opts.corrupt_basis ? corrupted_basis() : upsilon();
  const auto res = map_indices<double>(opts.exec, opts.states, [&](std::size_t k) {
    const XState x = random_regular_xstate(opts.seed, k);
    std::mt19937_64 gen(case_seed(opts.seed ^ 0x51ULL, k));
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    const FilterOp f{unit(gen), unit(gen)};
    try {
      return check_filter_invariance(x, f, basis).deviation;
    } catch (const Error&) {
      return std::numeric_limits<double>::infinity();
    }
  });
  return finish("filter-invariance", res, 1e-8);
}

SuiteResult chi_four_identity_suite(const ValidationOptions& opts) {
  const auto res = map_indices<double>(opts.exec, opts.states, [&](std::size_t k) {
    const XState x = random_regular_xstate(opts.seed, k);
    const FilterFamily fam(x);
    std::mt19937_64 gen(case_seed(opts.seed ^ 0x4cULL, k));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double q = unit(gen);
    double z1 = fam.z_min() + (fam.z_max() - fam.z_min()) * (0.001 + 0.998 * unit(gen));
    double z2 = fam.z_min() + (fam.z_max() - fam.z_min()) * (0.001 + 0.998 * unit(gen));
    if (z1 > z2) std::swap(z1, z2);
    const ChiFour closed = chi_four_closed_form(x, q, z1, z2);
    const double generic = chi_four(x, q, z1, z2);
    return std::max(std::abs(closed.value - generic), std::max(0.0, -closed.concavity));
  });
  return finish("chi4-identity", res, 1e-10);
}

SuiteResult completeness_suite(const ValidationOptions& opts) {
  const auto res = map_indices<double>(opts.exec, opts.states, [&](std::size_t k) {
    const XState x = random_xstate(case_seed(opts.seed, k));
    const CMat4 rho = to_density(x);
    const CMat2 rho_a = reduced_a(x);
    std::mt19937_64 gen(case_seed(opts.seed ^ 0xc0ULL, k));
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi / 2);
    double worst = 0.0;
    for (const Povm& p : {three_element_family(angle(gen), Apex::up),
                          three_element_family(angle(gen), Apex::down),
                          vn_horizontal(), vn_vertical()}) {
      worst = std::max(worst, p.completeness_residual());
      const Ensemble e = post_measurement_ensemble(rho, p);
      worst = std::max(worst, (e.average() - rho_a).cwiseAbs().maxCoeff());
      worst = std::max(worst, std::abs(e.total_probability() - 1.0));
    }
    return worst;
  });
  return finish("completeness", res, 1e-12);
}

SuiteResult recovery_suite(const ValidationOptions& opts) {
  const auto res = map_indices<double>(opts.exec, opts.states, [&](std::size_t k) {
    const XState x = random_regular_xstate(opts.seed, k);
    const XState y = filter_family(x, std::sqrt(x.a + x.c));
    return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b), std::abs(x.c - y.c),
                     std::abs(x.d - y.d), std::abs(x.u - y.u), std::abs(x.v - y.v)});
  });
  return finish("recovery", res, 1e-10);
}

SuiteResult evolution_shortcut_suite(const ValidationOptions& opts) {
  const auto res = map_indices<double>(opts.exec, opts.states, [&](std::size_t k) {
    const XState x = random_xstate(case_seed(opts.seed, k));
    std::mt19937_64 gen(case_seed(opts.seed ^ 0xe5ULL, k));
    const double gamma = std::uniform_real_distribution<double>(0.0, 1.0)(gen);
    const CMat4 full = evolve_kraus(to_density(x), gamma);
    const CMat4 fast = to_density(evolve_two_sided(x, gamma));
    return (full - fast).cwiseAbs().maxCoeff();
  });
  return finish("evolution-shortcut", res, 1e-12);
}

std::vector<SuiteResult> run_validation(const ValidationOptions& opts) {
  return {filter_invariance_suite(opts), chi_four_identity_suite(opts),
          completeness_suite(opts), recovery_suite(opts), evolution_shortcut_suite(opts)};
}

}  // namespace discord
