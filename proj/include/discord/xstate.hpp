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

#include "discord/numerics.hpp"

namespace discord {

inline constexpr double kNormalizationTol = 1e-10;
inline constexpr double kPositivitySlack = 1e-12;

/// Canonical two-qubit X state
///
///   | a 0 0 u |
///   | 0 b v 0 |
///   | 0 v c 0 |
///   | u 0 0 d |
///
/// with real, non-negative coherences. Construct through validate() to get a
/// checked value; aggregate initialization is left open for internal code that
/// has already established the invariants.
struct XState {
  double a = 0.25;
  double b = 0.25;
  double c = 0.25;
  double d = 0.25;
  double u = 0.0;
  double v = 0.0;

  friend bool operator==(const XState&, const XState&) = default;
};

/// Diagonal local filter diag(f0, f1) acting on one qubit.
struct FilterOp {
  double f0 = 1.0;
  double f1 = 1.0;

  double det() const { return f0 * f1; }
  CMat2 matrix() const;
};

/// Checks a+b+c+d = 1, non-negativity, u^2 <= ad and v^2 <= bc. Throws
/// NotNormalized / NegativeParameter / PositivityViolation.
XState validate(double a, double b, double c, double d, double u, double v);
XState validate(const XState& raw);

CMat4 to_density(const XState& x);

/// diag(a+b, c+d)
CMat2 reduced_a(const XState& x);
/// diag(a+c, b+d)
CMat2 reduced_b(const XState& x);

/// Bloch z of qubit A, a+b-c-d.
inline double bloch_z_a(const XState& x) { return x.a + x.b - x.c - x.d; }

/// F = diag(sqrt(a+c), sqrt(b+d)). Throws DegenerateMarginal when qubit B is
/// pure.
FilterOp canonical_filter(const XState& x);

/// Reads an X state back from a density matrix with X support. Entries off the
/// X pattern are ignored.
XState xstate_from_density(const CMat4& rho);

/// Uniform on the probability simplex for (a,b,c,d); u, v uniform on their
/// positivity ranges.
XState random_xstate(std::uint64_t seed);

}  // namespace discord
