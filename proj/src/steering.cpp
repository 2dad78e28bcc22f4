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

#include "discord/steering.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "discord/error.hpp"

namespace discord {

namespace {

CMat4 diag_superop(const FilterOp& f) {
  const CMat2 m = f.matrix();
  return kron(m, m.conjugate());
}

const Eigen::Matrix4d& eta() {
  static const Eigen::Matrix4d m =
      Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
  return m;
}

}  // namespace

double EllipsoidMatrix::quadric(double x, double y, double z) const {
  const Eigen::Vector4d p(1.0, x, y, z);
  return p.dot(e * p);
}

EllipsoidMatrix EllipsoidMatrix::normalized() const {
  const double s = e.cwiseAbs().maxCoeff();
  return EllipsoidMatrix{s > 0.0 ? Eigen::Matrix4d(e / s) : e};
}

Channel extract_channel(const XState& x) {
  const FilterOp f = canonical_filter(x);
  const CMat4 lambda_f = diag_superop(f);
  // Lambda_F is diagonal and real, so its inverse transpose is elementwise.
  CMat4 inv_t = CMat4::Zero();
  for (int k = 0; k < 4; ++k) inv_t(k, k) = 1.0 / lambda_f(k, k);

  Channel ch;
  ch.lambda = reshuffle(to_density(x)) * inv_t;
  const CMat4& u = upsilon();
  ch.l = (u * ch.lambda * u.adjoint()).real();
  return ch;
}

SteeringEllipsoid ellipsoid_params(const XState& x) {
  canonical_filter(x);  // DegenerateMarginal check
  const double p = (x.a + x.c) * (x.b + x.d);
  const double sp = std::sqrt(p);
  return SteeringEllipsoid{(x.u + x.v) / sp, std::abs(x.u - x.v) / sp,
                           std::abs(x.a * x.d - x.b * x.c) / p,
                           (x.a * x.b - x.c * x.d) / p};
}

SteeringEllipsoid ellipsoid_from_channel(const Channel& ch) {
  return SteeringEllipsoid{std::abs(ch.l(1, 1)), std::abs(ch.l(2, 2)),
                           std::abs(ch.l(3, 3)), ch.l(3, 0)};
}

EllipsoidMatrix ellipsoid_matrix(const RMat& r) {
  Eigen::FullPivLU<RMat> lu(r);
  const double det = lu.determinant();
  if (!(std::abs(det) >= kSingularRTol)) {
    throw Error(ErrorCode::SingularR, "|det R| = " + std::to_string(std::abs(det)));
  }
  const RMat inv = lu.inverse();
  Eigen::Matrix4d e = inv.transpose() * eta() * inv;
  e = 0.5 * (e + e.transpose());
  return EllipsoidMatrix{e};
}

CMat4 apply_filter_b(const CMat4& rho, const CMat2& filter, double* norm) {
  const CMat4 op = kron(CMat2::Identity(), filter);
  CMat4 out = op * rho * op.adjoint();
  const double n = out.trace().real();
  if (norm) *norm = n;
  return out / n;
}

FilterInvarianceReport check_filter_invariance(const XState& x,
                                               const FilterOp& filter,
                                               const CMat4& basis) {
  if (!(filter.det() > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "filter is not invertible");
  }
  const CMat4 rho = to_density(x);
  double n = 0.0;
  const CMat4 filtered = apply_filter_b(rho, filter.matrix(), &n);
  const Eigen::Matrix4d e = ellipsoid_matrix(to_pauli_rep(rho, basis)).e;
  const Eigen::Matrix4d ep = ellipsoid_matrix(to_pauli_rep(filtered, basis)).e;

  FilterInvarianceReport rep;
  rep.ratio = (ep.array() * e.array()).sum() / e.squaredNorm();
  rep.predicted_ratio = n * n / (filter.det() * filter.det());
  rep.deviation = (ep - rep.ratio * e).cwiseAbs().maxCoeff() / ep.cwiseAbs().maxCoeff();
  return rep;
}

FilterInvarianceReport check_filter_invariance(const XState& x,
                                               const FilterOp& filter) {
  return check_filter_invariance(x, filter, upsilon());
}

FilterFamily::FilterFamily(const XState& x)
    : base_(x), channel_(extract_channel(x)) {
  z_at_0_ = (x.b - x.d) / (x.b + x.d);
  z_at_1_ = (x.a - x.c) / (x.a + x.c);
}

CMat4 FilterFamily::filtered(double xi) const {
  if (!(xi > 0.0 && xi < 1.0)) {
    throw Error(ErrorCode::XiOutOfRange, "xi = " + std::to_string(xi));
  }
  const CMat4 lambda_xi = diag_superop(FilterOp{xi, std::sqrt(1.0 - xi * xi)});
  // [sigma(xi)]^R = Lambda Lambda_xi^T; already unit trace.
  const CMat4 sigma = reshuffle_inverse(channel_.lambda * lambda_xi.transpose());
  return sigma / sigma.trace().real();
}

XState FilterFamily::state_at(double xi) const {
  return validate(xstate_from_density(filtered(xi)));
}

double FilterFamily::z_at(double xi) const {
  const CMat4 s = filtered(xi);
  return (s(0, 0) + s(1, 1) - s(2, 2) - s(3, 3)).real();
}

double FilterFamily::z_min() const { return std::min(z_at_0_, z_at_1_); }
double FilterFamily::z_max() const { return std::max(z_at_0_, z_at_1_); }

double FilterFamily::xi_at(double z, double tol) const {
  if (!(z > z_min() && z < z_max())) {
    throw Error(ErrorCode::ZOutOfRange,
                "z = " + std::to_string(z) + " outside the open apex interval");
  }
  const bool increasing = z_at_1_ > z_at_0_;
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const bool below = z_at(mid) < z;
    if (below == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool FilterFamily::is_monotone(int n) const {
  const bool increasing = z_at_1_ > z_at_0_;
  double prev = z_at_0_;
  for (int k = 1; k <= n; ++k) {
    const double xi = static_cast<double>(k) / (n + 1);
    const double z = z_at(xi);
    if (increasing ? !(z > prev) : !(z < prev)) return false;
    prev = z;
  }
  return increasing ? z_at_1_ > prev : z_at_1_ < prev;
}

XState filter_family(const XState& x, double xi) {
  return FilterFamily(x).state_at(xi);
}

double z_of_xi(const XState& x, double xi) { return FilterFamily(x).z_at(xi); }

double xi_of_z(const XState& x, double z) { return FilterFamily(x).xi_at(z); }

}  // namespace discord
