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

#include "discord/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "discord/error.hpp"

namespace discord {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NegativeParameter: return "NegativeParameter";
    case ErrorCode::PositivityViolation: return "PositivityViolation";
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::UnphysicalState: return "UnphysicalState";
    case ErrorCode::DegenerateMarginal: return "DegenerateMarginal";
    case ErrorCode::SingularR: return "SingularR";
    case ErrorCode::XiOutOfRange: return "XiOutOfRange";
    case ErrorCode::ZOutOfRange: return "ZOutOfRange";
    case ErrorCode::GammaOutOfRange: return "GammaOutOfRange";
    case ErrorCode::NoCrossing: return "NoCrossing";
    case ErrorCode::InvalidPovm: return "InvalidPovm";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code) {}

const std::array<CMat2, 4>& pauli() {
  static const std::array<CMat2, 4> p = [] {
    const Complex i(0.0, 1.0);
    std::array<CMat2, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -i, i, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return p;
}

CMat4 reshuffle(const CMat4& m) {
  CMat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int ip = 0; ip < 2; ++ip)
        for (int jp = 0; jp < 2; ++jp)
          out(2 * i + ip, 2 * j + jp) = m(2 * i + j, 2 * ip + jp);
  return out;
}

CMat4 reshuffle_inverse(const CMat4& m) {
  CMat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int ip = 0; ip < 2; ++ip)
        for (int jp = 0; jp < 2; ++jp)
          out(2 * i + j, 2 * ip + jp) = m(2 * i + ip, 2 * j + jp);
  return out;
}

const CMat4& upsilon() {
  static const CMat4 u = [] {
    const Complex i(0.0, 1.0);
    CMat4 m;
    m << 1, 0, 0, 1,
         0, 1, 1, 0,
         0, i, -i, 0,
         1, 0, 0, -1;
    return CMat4(m / std::sqrt(2.0));
  }();
  return u;
}

double hermiticity_residue(const CMat4& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double hermiticity_residue(const CMat2& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

RMat to_pauli_rep(const CMat4& rho) { return to_pauli_rep(rho, upsilon()); }

RMat to_pauli_rep(const CMat4& rho, const CMat4& basis) {
  const double res = hermiticity_residue(rho);
  if (!(res <= kHermitianTol)) {
    throw Error(ErrorCode::NonHermitianInput,
                "max |rho - rho^dagger| = " + std::to_string(res));
  }
  const CMat4 r = 2.0 * basis * reshuffle(rho) * basis.transpose();
  return r.real();
}

CMat4 from_pauli_rep(const RMat& r) {
  const CMat4& u = upsilon();
  const CMat4 shuffled = 0.5 * u.adjoint() * r.cast<Complex>() * u.conjugate();
  return reshuffle_inverse(shuffled);
}

double binary_entropy(double p) {
  double s = 0.0;
  if (p > 0.0) s -= p * std::log2(p);
  if (p < 1.0) s -= (1.0 - p) * std::log2(1.0 - p);
  return s;
}

double qubit_entropy(double bloch_radius) {
  const double r = std::clamp(bloch_radius, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + r));
}

namespace {

double entropy_of_spectrum(const double* ev, int n) {
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    double lam = ev[k];
    if (lam < -kEigenClip) {
      throw Error(ErrorCode::UnphysicalState,
                  "eigenvalue " + std::to_string(lam) + " < -1e-9");
    }
    if (lam < kEigenClip) continue;
    if (lam > 1.0) lam = 1.0;
    s -= lam * std::log2(lam);
  }
  return s;
}

}  // namespace

double von_neumann_entropy(const CMat2& rho) {
  const double t = 0.5 * (rho(0, 0).real() + rho(1, 1).real());
  const double half_diff = 0.5 * (rho(0, 0).real() - rho(1, 1).real());
  const double gap = std::sqrt(half_diff * half_diff + std::norm(rho(0, 1)));
  const double ev[2] = {t - gap, t + gap};
  return entropy_of_spectrum(ev, 2);
}

Eigen::Vector4d hermitian_eigenvalues(const CMat4& m) {
  Eigen::SelfAdjointEigenSolver<CMat4> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double von_neumann_entropy(const CMat4& rho) {
  const Eigen::Vector4d ev = hermitian_eigenvalues(rho);
  return entropy_of_spectrum(ev.data(), 4);
}

BlochVector bloch_vector(const CMat2& rho) {
  return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(),
          (rho(0, 0) - rho(1, 1)).real()};
}

CMat2 density_from_bloch(const BlochVector& r) {
  const auto& s = pauli();
  return 0.5 * (s[0] + r.x() * s[1] + r.y() * s[2] + r.z() * s[3]);
}

CMat2 partial_trace_a(const CMat4& rho) {
  CMat2 out = CMat2::Zero();
  for (int j = 0; j < 2; ++j)
    for (int jp = 0; jp < 2; ++jp)
      for (int i = 0; i < 2; ++i) out(j, jp) += rho(2 * i + j, 2 * i + jp);
  return out;
}

CMat2 partial_trace_b(const CMat4& rho) {
  CMat2 out = CMat2::Zero();
  for (int i = 0; i < 2; ++i)
    for (int ip = 0; ip < 2; ++ip)
      for (int j = 0; j < 2; ++j) out(i, ip) += rho(2 * i + j, 2 * ip + j);
  return out;
}

CMat4 kron(const CMat2& a, const CMat2& b) {
  CMat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace discord
