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

#include "discord/measurement.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "discord/error.hpp"
#include "discord/optimize.hpp"
#include "discord/steering.hpp"

namespace discord {

CMat2 PovmElement::op() const { return alpha * density_from_bloch(m); }

double completeness_residual(const std::vector<PovmElement>& elements) {
  double weight = 0.0;
  BlochVector moment = BlochVector::Zero();
  for (const auto& el : elements) {
    weight += el.alpha;
    moment += el.alpha * el.m;
  }
  return std::max(std::abs(weight - 2.0), moment.norm());
}

Povm::Povm(std::vector<PovmElement> elements) : elements_(std::move(elements)) {
  if (elements_.empty() || elements_.size() > 4) {
    throw Error(ErrorCode::InvalidPovm,
                "expected 1..4 elements, got " + std::to_string(elements_.size()));
  }
  for (const auto& el : elements_) {
    if (!(el.alpha > 0.0) || std::abs(el.m.norm() - 1.0) > kCompletenessTol) {
      throw Error(ErrorCode::InvalidPovm, "element weight must be positive with unit direction");
    }
  }
  const double res = discord::completeness_residual(elements_);
  if (res > kCompletenessTol) {
    throw Error(ErrorCode::InvalidPovm, "completeness residual " + std::to_string(res));
  }
}

double Povm::completeness_residual() const {
  return discord::completeness_residual(elements_);
}

double Ensemble::total_probability() const {
  double s = 0.0;
  for (const auto& m : members) s += m.p;
  return s;
}

CMat2 Ensemble::average() const {
  CMat2 avg = CMat2::Zero();
  for (const auto& m : members) avg += m.p * m.rho;
  return avg;
}

Ensemble post_measurement_ensemble(const CMat4& rho, const Povm& povm) {
  Ensemble e;
  for (const auto& el : povm.elements()) {
    const CMat4 lifted = kron(CMat2::Identity(), el.op());
    const CMat2 unnorm = partial_trace_b(rho * lifted);
    const double p = unnorm.trace().real();
    if (p < kZeroProbability) {
      ++e.dropped;
      continue;
    }
    CMat2 member = unnorm / p;
    member = 0.5 * (member + member.adjoint()).eval();
    e.members.push_back({p, member});
  }
  return e;
}

double holevo(const Ensemble& e) {
  double chi = von_neumann_entropy(CMat2(e.average()));
  for (const auto& m : e.members) chi -= m.p * von_neumann_entropy(m.rho);
  return chi;
}

double holevo_pauli(const RMat& r, const std::vector<PovmElement>& elements) {
  const double s_a = qubit_entropy(r.block<3, 1>(1, 0).norm());
  double avg = 0.0;
  for (const auto& el : elements) {
    const Eigen::Vector4d w = r * Eigen::Vector4d(1.0, el.m.x(), el.m.y(), el.m.z());
    const double p = 0.5 * el.alpha * w(0);
    if (p < kZeroProbability) continue;
    avg += p * qubit_entropy(w.tail<3>().norm() / w(0));
  }
  return s_a - avg;
}

double holevo_pauli(const RMat& r, const Povm& povm) {
  return holevo_pauli(r, povm.elements());
}

Povm vn_horizontal() {
  return Povm({{1.0, BlochVector::UnitX()}, {1.0, -BlochVector::UnitX()}});
}

Povm vn_vertical() {
  return Povm({{1.0, BlochVector::UnitZ()}, {1.0, -BlochVector::UnitZ()}});
}

std::string_view to_string(Apex apex) { return apex == Apex::up ? "up" : "down"; }

namespace {

std::vector<PovmElement> three_element_raw(double theta, Apex apex) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double sign = apex == Apex::up ? 1.0 : -1.0;
  const double alpha_apex = 2.0 * c / (1.0 + c);
  const double alpha_pair = 1.0 / (1.0 + c);

  std::vector<PovmElement> els;
  if (alpha_apex > 1e-15) els.push_back({alpha_apex, BlochVector(0.0, 0.0, sign)});
  if (s == 0.0) {
    // Both chord elements coincide at the opposite apex.
    els.push_back({2.0 * alpha_pair, BlochVector(0.0, 0.0, -sign)});
  } else {
    els.push_back({alpha_pair, BlochVector(s, 0.0, -sign * c)});
    els.push_back({alpha_pair, BlochVector(-s, 0.0, -sign * c)});
  }
  return els;
}

}  // namespace

Povm three_element_family(double theta, Apex apex) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2 + 1e-15)) {
    throw Error(ErrorCode::InvalidArgument, "theta outside [0, pi/2]");
  }
  return Povm(three_element_raw(theta, apex));
}

double chi_three(const RMat& r, double theta, Apex apex) {
  return holevo_pauli(r, three_element_raw(theta, apex));
}

ThreeElementOptimum optimize_three(const RMat& r) {
  constexpr int kIntervals = 64;
  constexpr double kHalfPi = std::numbers::pi / 2;
  ThreeElementOptimum best{0.0, Apex::up, -1.0};
  for (Apex apex : {Apex::up, Apex::down}) {
    int best_k = 0;
    double best_val = -1.0;
    for (int k = 0; k <= kIntervals; ++k) {
      const double v = chi_three(r, kHalfPi * k / kIntervals, apex);
      if (v > best_val) {
        best_val = v;
        best_k = k;
      }
    }
    ThreeElementOptimum cand{kHalfPi * best_k / kIntervals, apex, best_val};
    const double lo = kHalfPi * std::max(best_k - 1, 0) / kIntervals;
    const double hi = kHalfPi * std::min(best_k + 1, kIntervals) / kIntervals;
    const auto refined = golden_section_maximize(
        [&](double t) { return chi_three(r, t, apex); }, lo, hi, 1e-8);
    if (refined.value > cand.chi) cand = {refined.x, apex, refined.value};
    if (cand.chi > best.chi) best = cand;
  }
  return best;
}

VonNeumannChi chi_hv(const RMat& r) {
  return {holevo_pauli(r, vn_horizontal()), holevo_pauli(r, vn_vertical())};
}

namespace {

void check_q(double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "q outside [0, 1]");
  }
}

}  // namespace

Ensemble four_element_ensemble(const XState& x, double q, double z1, double z2) {
  check_q(q);
  const FilterFamily fam(x);
  const XState s1 = fam.state_at(fam.xi_at(z1, 0.0));
  const XState s2 = fam.state_at(fam.xi_at(z2, 0.0));
  const Ensemble h = post_measurement_ensemble(to_density(s1), vn_horizontal());
  const Ensemble v = post_measurement_ensemble(to_density(s2), vn_vertical());

  Ensemble out;
  out.dropped = h.dropped + v.dropped;
  auto add = [&out](double p, const CMat2& rho) {
    if (p < kZeroProbability) {
      ++out.dropped;
    } else {
      out.members.push_back({p, rho});
    }
  };
  for (const auto& m : h.members) add(q * m.p, m.rho);
  for (const auto& m : v.members) add((1.0 - q) * m.p, m.rho);
  return out;
}

ChiFour chi_four_closed_form(const XState& x, double q, double z1, double z2) {
  check_q(q);
  const FilterFamily fam(x);
  const XState s1 = fam.state_at(fam.xi_at(z1, 0.0));
  const XState s2 = fam.state_at(fam.xi_at(z2, 0.0));
  const double za1 = bloch_z_a(s1);
  const double za2 = bloch_z_a(s2);
  const double zq = q * za1 + (1.0 - q) * za2;

  ChiFour out;
  out.chi_h_z1 = holevo_pauli(to_pauli_rep(to_density(s1)), vn_horizontal());
  out.chi_v_z2 = holevo_pauli(to_pauli_rep(to_density(s2)), vn_vertical());
  out.concavity = qubit_entropy(std::abs(zq)) - q * qubit_entropy(std::abs(za1)) -
                  (1.0 - q) * qubit_entropy(std::abs(za2));
  out.value = q * out.chi_h_z1 + (1.0 - q) * out.chi_v_z2 + out.concavity;
  return out;
}

double chi_four(const XState& x, double q, double z1, double z2) {
  return holevo(four_element_ensemble(x, q, z1, z2));
}

}  // namespace discord
