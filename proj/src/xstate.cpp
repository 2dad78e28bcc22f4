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

#include "discord/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "discord/error.hpp"

namespace discord {

CMat2 FilterOp::matrix() const {
  CMat2 m = CMat2::Zero();
  m(0, 0) = f0;
  m(1, 1) = f1;
  return m;
}

XState validate(double a, double b, double c, double d, double u, double v) {
  const double p[6] = {a, b, c, d, u, v};
  const char* names[6] = {"a", "b", "c", "d", "u", "v"};
  for (int k = 0; k < 6; ++k) {
    if (!std::isfinite(p[k])) {
      throw Error(ErrorCode::NegativeParameter,
                  std::string(names[k]) + " is not finite");
    }
    if (p[k] < 0.0) {
      throw Error(ErrorCode::NegativeParameter, std::string(names[k]) + " < 0");
    }
  }
  const double sum = a + b + c + d;
  if (std::abs(sum - 1.0) > kNormalizationTol) {
    std::ostringstream os;
    os.precision(12);
    os << "a+b+c+d = " << sum;
    throw Error(ErrorCode::NotNormalized, os.str());
  }
  if (u * u > a * d + kPositivitySlack) {
    throw Error(ErrorCode::PositivityViolation, "u^2 > ad");
  }
  if (v * v > b * c + kPositivitySlack) {
    throw Error(ErrorCode::PositivityViolation, "v^2 > bc");
  }
  return XState{a, b, c, d, u, v};
}

XState validate(const XState& raw) {
  return validate(raw.a, raw.b, raw.c, raw.d, raw.u, raw.v);
}

CMat4 to_density(const XState& x) {
  CMat4 rho = CMat4::Zero();
  rho(0, 0) = x.a;
  rho(1, 1) = x.b;
  rho(2, 2) = x.c;
  rho(3, 3) = x.d;
  rho(0, 3) = rho(3, 0) = x.u;
  rho(1, 2) = rho(2, 1) = x.v;
  return rho;
}

CMat2 reduced_a(const XState& x) {
  CMat2 m = CMat2::Zero();
  m(0, 0) = x.a + x.b;
  m(1, 1) = x.c + x.d;
  return m;
}

CMat2 reduced_b(const XState& x) {
  CMat2 m = CMat2::Zero();
  m(0, 0) = x.a + x.c;
  m(1, 1) = x.b + x.d;
  return m;
}

FilterOp canonical_filter(const XState& x) {
  const double p0 = x.a + x.c;
  const double p1 = x.b + x.d;
  if (!(p0 > 0.0) || !(p1 > 0.0)) {
    throw Error(ErrorCode::DegenerateMarginal,
                p0 > 0.0 ? "b+d = 0 (qubit B pure)" : "a+c = 0 (qubit B pure)");
  }
  return FilterOp{std::sqrt(p0), std::sqrt(p1)};
}

XState xstate_from_density(const CMat4& rho) {
  if (hermiticity_residue(rho) > kHermitianTol) {
    throw Error(ErrorCode::NonHermitianInput, "density is not Hermitian");
  }
  double stray = std::max(std::abs(rho(0, 3).imag()), std::abs(rho(1, 2).imag()));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      stray = std::max(stray, std::abs(rho(i, j)));
    }
  }
  if (stray > kHermitianTol) {
    throw Error(ErrorCode::InvalidArgument, "density is not a real X state");
  }
  return validate(rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real(), rho(3, 3).real(),
                  rho(0, 3).real(), rho(1, 2).real());
}

XState random_xstate(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double e[4];
  double total = 0.0;
  for (double& w : e) {
    w = expo(gen);
    total += w;
  }
  XState x;
  x.a = e[0] / total;
  x.b = e[1] / total;
  x.c = e[2] / total;
  x.d = 1.0 - x.a - x.b - x.c;
  if (x.d < 0.0) x.d = 0.0;
  x.u = unit(gen) * std::sqrt(x.a * x.d);
  x.v = unit(gen) * std::sqrt(x.b * x.c);
  return x;
}

}  // namespace discord
