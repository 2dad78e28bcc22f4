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

#include "discord/numerics.hpp"
#include "discord/xstate.hpp"

namespace discord {

/// One-qubit channel on A extracted from an X state, in the computational
/// superoperator form (lambda) and the Pauli/Heisenberg form (l).
struct Channel {
  CMat4 lambda;
  RMat l;
};

/// x^2/l1^2 + y^2/l2^2 + (z - z0)^2/l3^2 = 1. Zero axes are allowed and mean
/// the ellipsoid has collapsed along that direction.
struct SteeringEllipsoid {
  double l1 = 0.0;
  double l2 = 0.0;
  double l3 = 0.0;
  double z0 = 0.0;

  double apex_low() const { return z0 - l3; }
  double apex_high() const { return z0 + l3; }
};

/// Quadric (1 x y z) E (1 x y z)^T = 0.
struct EllipsoidMatrix {
  Eigen::Matrix4d e;

  double quadric(double x, double y, double z) const;
  /// Rescaled so the largest |entry| is 1 (the quadric is defined up to scale).
  EllipsoidMatrix normalized() const;
};

/// Lambda = rho^R Lambda_F^{-T}, L = Y Lambda Y^dagger.
Channel extract_channel(const XState& x);

/// Axes from the closed-form X-state expressions.
SteeringEllipsoid ellipsoid_params(const XState& x);
/// Axes read off a channel's Heisenberg matrix (image of the unit sphere).
SteeringEllipsoid ellipsoid_from_channel(const Channel& ch);

inline constexpr double kSingularRTol = 1e-12;

/// E = R^{-T} eta R^{-1}, eta = diag(1,-1,-1,-1). Throws SingularR.
EllipsoidMatrix ellipsoid_matrix(const RMat& r);

/// (1 (x) F) rho (1 (x) F)^dagger / N, returns N through `norm` when given.
CMat4 apply_filter_b(const CMat4& rho, const CMat2& filter, double* norm = nullptr);

struct FilterInvarianceReport {
  double ratio = 0.0;            // fitted E' / E
  double predicted_ratio = 0.0;  // N^2 / |det F|^2
  double deviation = 0.0;        // max |E' - ratio E| / max |E'|
};

/// Filters qubit B and compares the ellipsoid matrices before and after. The
/// basis argument exists for fault-injection runs; pass upsilon() otherwise.
FilterInvarianceReport check_filter_invariance(const XState& x,
                                               const FilterOp& filter,
                                               const CMat4& basis);
FilterInvarianceReport check_filter_invariance(const XState& x,
                                               const FilterOp& filter);

/// Family of states sharing the steering ellipsoid of `x`, obtained by
/// re-filtering qubit B with diag(xi, sqrt(1-xi^2)). The reduced state of A
/// slides along z between the two vertical apexes.
class FilterFamily {
 public:
  explicit FilterFamily(const XState& x);

  const XState& base() const { return base_; }
  const Channel& channel() const { return channel_; }

  /// Normalized filtered state. Throws XiOutOfRange unless 0 < xi < 1.
  XState state_at(double xi) const;
  /// Bloch z of the reduced state of A.
  double z_at(double xi) const;
  /// Bisection on the forward map. Throws ZOutOfRange unless z lies strictly
  /// between the two apex limits. tol <= 0 bisects to machine precision.
  double xi_at(double z, double tol = 1e-10) const;

  /// Limits of z as xi -> 0 and xi -> 1.
  double z_limit_at_0() const { return z_at_0_; }
  double z_limit_at_1() const { return z_at_1_; }
  double z_min() const;
  double z_max() const;

  /// Samples z(xi) on n points and checks strict monotonicity.
  bool is_monotone(int n = 1000) const;

 private:
  CMat4 filtered(double xi) const;

  XState base_;
  Channel channel_;
  double z_at_0_;
  double z_at_1_;
};

XState filter_family(const XState& x, double xi);
double z_of_xi(const XState& x, double xi);
double xi_of_z(const XState& x, double z);

}  // namespace discord
