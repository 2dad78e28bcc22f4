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

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace discord {

using Complex = std::complex<double>;
using CMat2 = Eigen::Matrix2cd;
using CMat4 = Eigen::Matrix4cd;

/// Pauli-basis (Hilbert-Schmidt) representation of a two-qubit operator:
/// R(mu, nu) = Tr[rho sigma_mu (x) sigma_nu], qubit A indexes rows.
using RMat = Eigen::Matrix4d;

using BlochVector = Eigen::Vector3d;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kEigenClip = 1e-9;

/// sigma_0 .. sigma_3 (identity, X, Y, Z).
const std::array<CMat2, 4>& pauli();

/// Index map |ij><i'j'| -> |ii'><jj'| with basis order |00>,|01>,|10>,|11>
/// and qubit A as the left factor. The map is its own inverse.
CMat4 reshuffle(const CMat4& m);
CMat4 reshuffle_inverse(const CMat4& m);

/// Constant unitary taking the computational product basis to the
/// normalized Pauli basis: rows (1,0,0,1), (0,1,1,0), (0,i,-i,0), (1,0,0,-1)
/// divided by sqrt(2).
const CMat4& upsilon();

double hermiticity_residue(const CMat4& m);
double hermiticity_residue(const CMat2& m);

/// R = 2 Y rho^R Y^T. Throws NonHermitianInput.
RMat to_pauli_rep(const CMat4& rho);
/// Same with an explicit basis matrix in place of upsilon(). Used by the
/// validation suites to inject a corrupted basis.
RMat to_pauli_rep(const CMat4& rho, const CMat4& basis);
CMat4 from_pauli_rep(const RMat& r);

/// h(p) = -p log2 p - (1-p) log2 (1-p), with 0 log 0 = 0.
double binary_entropy(double p);
/// Entropy of a qubit with Bloch radius r.
double qubit_entropy(double bloch_radius);

/// Von Neumann entropy in bits. Throws UnphysicalState when an eigenvalue is
/// below -1e-9.
double von_neumann_entropy(const CMat2& rho);
double von_neumann_entropy(const CMat4& rho);

/// Eigenvalues (ascending) of a Hermitian 4x4 matrix.
Eigen::Vector4d hermitian_eigenvalues(const CMat4& m);

BlochVector bloch_vector(const CMat2& rho);
CMat2 density_from_bloch(const BlochVector& r);

CMat2 partial_trace_a(const CMat4& rho);
CMat2 partial_trace_b(const CMat4& rho);

CMat4 kron(const CMat2& a, const CMat2& b);

}  // namespace discord
