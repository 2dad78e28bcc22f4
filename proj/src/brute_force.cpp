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

#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "discord/error.hpp"
#include "discord/measurement.hpp"

namespace discord {

namespace {

constexpr int kMaxElements = 4;
constexpr int kParamsPerElement = 4;  // one complex 2-vector
using Params = std::array<double, kMaxElements * kParamsPerElement>;

// Maps free vectors v_k onto the POVM S^{-1/2} v_k v_k^dagger S^{-1/2}.
// Returns false when S is ill-conditioned or the result is not complete.
bool to_elements(const Params& x, int n, std::vector<PovmElement>& out) {
  std::array<Eigen::Vector2cd, kMaxElements> v;
  CMat2 s = CMat2::Zero();
  for (int k = 0; k < n; ++k) {
    const double* p = x.data() + kParamsPerElement * k;
    v[k] = Eigen::Vector2cd(Complex(p[0], p[1]), Complex(p[2], p[3]));
    s += v[k] * v[k].adjoint();
  }
  // S = s0 1 + sv.sigma, eigenvalues s0 +- |sv|.
  const double s0 = 0.5 * (s(0, 0) + s(1, 1)).real();
  const BlochVector sv(s(0, 1).real(), -s(0, 1).imag(), 0.5 * (s(0, 0) - s(1, 1)).real());
  const double r = sv.norm();
  const double lam_hi = s0 + r;
  const double lam_lo = s0 - r;
  if (!(lam_lo > 1e-8 * lam_hi)) return false;
  const double a = 0.5 * (1.0 / std::sqrt(lam_hi) + 1.0 / std::sqrt(lam_lo));
  const double b = r > 0.0 ? 0.5 * (1.0 / std::sqrt(lam_hi) - 1.0 / std::sqrt(lam_lo)) / r : 0.0;
  const auto& pm = pauli();
  const CMat2 inv_sqrt = a * pm[0] + b * (sv.x() * pm[1] + sv.y() * pm[2] + sv.z() * pm[3]);

  out.clear();
  for (int k = 0; k < n; ++k) {
    const Eigen::Vector2cd y = inv_sqrt * v[k];
    const double alpha = y.squaredNorm();
    if (!(alpha > 0.0)) continue;
    const Complex off = y(0) * std::conj(y(1));
    BlochVector m(2.0 * off.real(), -2.0 * off.imag(),
                  std::norm(y(0)) - std::norm(y(1)));
    m /= alpha;
    m.normalize();
    out.push_back({alpha, m});
  }
  return completeness_residual(out) <= 1e-12;
}

struct RestartResult {
  double chi = -std::numeric_limits<double>::infinity();
  Params x{};
  int n = 0;
};

RestartResult run_restart(const RMat& r, int n, std::uint64_t seed, int max_evals) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Params x{};
  for (int i = 0; i < n * kParamsPerElement; ++i) x[i] = normal(gen);

  std::vector<PovmElement> scratch;
  scratch.reserve(kMaxElements);
  int evals = 0;
  auto objective = [&](const Params& p) {
    ++evals;
    if (!to_elements(p, n, scratch)) return -std::numeric_limits<double>::infinity();
    return holevo_pauli(r, scratch);
  };

  double best = objective(x);
  double step = 0.5;
  const int dim = n * kParamsPerElement;
  while (step > 1e-7 && evals < max_evals) {
    bool improved = false;
    for (int i = 0; i < dim && evals < max_evals; ++i) {
      for (double dir : {1.0, -1.0}) {
        Params trial = x;
        trial[i] += dir * step;
        const double val = objective(trial);
        if (val > best) {
          best = val;
          x = trial;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return {best, x, n};
}

}  // namespace

BruteForceResult brute_force_optimize(const RMat& r, const BruteForceOptions& opts) {
  if (opts.max_elements < 2 || opts.max_elements > kMaxElements || opts.restarts < 1) {
    throw Error(ErrorCode::InvalidArgument, "need 2..4 elements and at least one restart");
  }
  const int span = opts.max_elements - 1;
  const auto results = map_indices<RestartResult>(
      opts.exec, static_cast<std::size_t>(opts.restarts), [&](std::size_t k) {
        const int n = 2 + static_cast<int>(k % span);
        return run_restart(r, n, opts.seed + k, opts.max_evaluations);
      });

  int best = 0;
  for (int k = 1; k < opts.restarts; ++k) {
    if (results[k].chi > results[best].chi) best = k;
  }
  BruteForceResult out;
  out.chi = results[best].chi;
  out.restart = best;
  to_elements(results[best].x, results[best].n, out.elements);
  return out;
}

}  // namespace discord
