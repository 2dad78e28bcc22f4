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
#include <optional>
#include <string_view>
#include <vector>

#include "discord/numerics.hpp"
#include "discord/parallel.hpp"
#include "discord/xstate.hpp"

namespace discord {

inline constexpr double kCompletenessTol = 1e-10;
inline constexpr double kZeroProbability = 1e-14;

/// alpha |m><m| = alpha (1 + m.sigma) / 2 with |m| = 1.
struct PovmElement {
  double alpha = 0.0;
  BlochVector m = BlochVector::UnitZ();

  CMat2 op() const;
};

/// Rank-one POVM on qubit B with 2..4 elements. The constructor enforces
/// sum(alpha) = 2 and sum(alpha m) = 0 within 1e-10.
class Povm {
 public:
  explicit Povm(std::vector<PovmElement> elements);

  const std::vector<PovmElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  /// max(|sum alpha - 2|, |sum alpha m|)
  double completeness_residual() const;

 private:
  std::vector<PovmElement> elements_;
};

double completeness_residual(const std::vector<PovmElement>& elements);

struct EnsembleMember {
  double p = 0.0;
  CMat2 rho;
};

struct Ensemble {
  std::vector<EnsembleMember> members;
  int dropped = 0;  // zero-probability outcomes excluded

  double total_probability() const;
  CMat2 average() const;
};

/// p_k = Tr[rho (1 (x) M_k)], rho_k = Tr_B[rho (1 (x) M_k)] / p_k.
Ensemble post_measurement_ensemble(const CMat4& rho, const Povm& povm);

/// S(sum p_k rho_k) - sum p_k S(rho_k), in bits.
double holevo(const Ensemble& e);

/// Holevo quantity of the ensemble induced on A, evaluated directly in the
/// Pauli representation: the outcome of alpha |m><m| steers A to R (1, m)
/// with probability alpha (R (1, m))_0 / 2.
double holevo_pauli(const RMat& r, const std::vector<PovmElement>& elements);
double holevo_pauli(const RMat& r, const Povm& povm);

Povm vn_horizontal();
Povm vn_vertical();

enum class Apex { up, down };
std::string_view to_string(Apex apex);

/// One element on the vertical apex direction (+z for up, -z for down) with
/// weight 2 cos(theta) / (1 + cos(theta)), two elements of weight
/// 1 / (1 + cos(theta)) along (+-sin(theta), 0, -cos(theta)) (z flipped for
/// down). theta = 0 is the sigma_z measurement, theta = pi/2 the sigma_x one.
Povm three_element_family(double theta, Apex apex);

double chi_three(const RMat& r, double theta, Apex apex);

struct ThreeElementOptimum {
  double theta = 0.0;
  Apex apex = Apex::up;
  double chi = 0.0;
};

/// 64-interval scan over theta in [0, pi/2] per apex, then golden-section
/// refinement to 1e-8 in theta around the best scan point.
ThreeElementOptimum optimize_three(const RMat& r);

struct VonNeumannChi {
  double horizontal = 0.0;  // sigma_x on B
  double vertical = 0.0;    // sigma_z on B
  double best() const { return horizontal > vertical ? horizontal : vertical; }
};

VonNeumannChi chi_hv(const RMat& r);

/// {q p_E, E(z1); q p_F, F(z1); (1-q) p_G, G(z2); (1-q) p_H, H(z2)}: the
/// horizontal decomposition of the family member at z1 mixed with the
/// vertical decomposition of the member at z2. Throws ZOutOfRange when z1 or
/// z2 is outside the open apex interval, InvalidArgument for q outside [0,1].
Ensemble four_element_ensemble(const XState& x, double q, double z1, double z2);

struct ChiFour {
  double chi_h_z1 = 0.0;    // horizontal Holevo quantity at z1
  double chi_v_z2 = 0.0;    // vertical Holevo quantity at z2
  double concavity = 0.0;   // S(z_q) - q S(z1) - (1-q) S(z2)
  double value = 0.0;       // q chi_h_z1 + (1-q) chi_v_z2 + concavity
};

/// Closed-form Holevo quantity of four_element_ensemble.
ChiFour chi_four_closed_form(const XState& x, double q, double z1, double z2);
/// Generic Holevo quantity of the same ensemble.
double chi_four(const XState& x, double q, double z1, double z2);

struct BruteForceOptions {
  int max_elements = 4;
  int restarts = 200;
  std::uint64_t seed = 0;
  int max_evaluations = 3000;
  Exec exec = Exec::parallel;
};

struct BruteForceResult {
  std::vector<PovmElement> elements;
  double chi = 0.0;
  int restart = -1;
};

/// Randomized-restart search over all rank-one POVMs with up to
/// max_elements elements. Free operators A_k = v_k v_k^dagger are mapped onto
/// a valid POVM by M_k = S^{-1/2} A_k S^{-1/2}, S = sum A_k, and refined by
/// coordinate ascent. Restart k uses seed + k and searches
/// 2 + k mod (max_elements - 1) elements; ties resolve to the lowest restart
/// index, so the result does not depend on the execution policy.
BruteForceResult brute_force_optimize(const RMat& r, const BruteForceOptions& opts);

}  // namespace discord
