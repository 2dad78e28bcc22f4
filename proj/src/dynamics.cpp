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

#include "discord/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "discord/error.hpp"

namespace discord {

DampingSpec DampingSpec::uniform(double rate, double t_max, int n, bool log_spacing) {
  if (n < 2 || !(t_max > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "need n >= 2 and t_max > 0");
  }
  DampingSpec spec;
  spec.rate = rate;
  spec.times.resize(n);
  for (int i = 0; i < n; ++i) {
    const double f = static_cast<double>(i) / (n - 1);
    spec.times[i] = log_spacing ? t_max * (std::pow(1000.0, f) - 1.0) / 999.0 : t_max * f;
  }
  spec.check();
  return spec;
}

void DampingSpec::check() const {
  if (!(rate >= 0.0) || !std::isfinite(rate)) {
    throw Error(ErrorCode::InvalidArgument, "damping rate must be finite and >= 0");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0) || (i > 0 && !(times[i] > times[i - 1]))) {
      throw Error(ErrorCode::InvalidArgument,
                  "times must be non-negative and strictly increasing");
    }
  }
}

double DampingSpec::gamma_at(double t) const { return std::exp(-rate * t); }

std::pair<CMat2, CMat2> phase_damp_kraus(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw Error(ErrorCode::GammaOutOfRange, "gamma = " + std::to_string(gamma));
  }
  CMat2 k1 = CMat2::Zero();
  CMat2 k2 = CMat2::Zero();
  k1(0, 0) = 1.0;
  k1(1, 1) = gamma;
  k2(1, 1) = std::sqrt(1.0 - gamma * gamma);
  return {k1, k2};
}

CMat4 evolve_kraus(const CMat4& rho, double gamma) {
  const auto [k1, k2] = phase_damp_kraus(gamma);
  const CMat2 ks[2] = {k1, k2};
  CMat4 out = CMat4::Zero();
  for (const auto& ki : ks) {
    for (const auto& kj : ks) {
      const CMat4 k = kron(ki, kj);
      out += k * rho * k.adjoint();
    }
  }
  return out;
}

XState evolve_two_sided(const XState& x, double gamma) {
  phase_damp_kraus(gamma);  // range check
  XState out = x;
  out.u *= gamma * gamma;
  out.v *= gamma * gamma;
  return out;
}

TrajectoryPoint trajectory_point(const XState& x, double rate, double t) {
  TrajectoryPoint pt;
  pt.t = t;
  pt.gamma = std::exp(-rate * t);
  const RMat r = to_pauli_rep(to_density(evolve_two_sided(x, pt.gamma)));
  const VonNeumannChi chi = chi_hv(r);
  pt.chi_h = chi.horizontal;
  pt.chi_v = chi.vertical;
  pt.c_hv = chi.best();
  pt.c_three = optimize_three(r).chi;
  pt.margin = pt.c_three - pt.c_hv;
  return pt;
}

Trajectory correlation_trajectory(const XState& x, const DampingSpec& spec,
                                  const std::vector<Strategy>& strategies,
                                  const BruteForceOptions& brute, Exec exec) {
  spec.check();
  Trajectory traj{x, spec, {}};
  BruteForceOptions inner = brute;
  inner.exec = Exec::serial;  // time points are the parallel axis
  traj.points = map_indices<TrajectoryPoint>(exec, spec.times.size(), [&](std::size_t i) {
    TrajectoryPoint pt = trajectory_point(x, spec.rate, spec.times[i]);
    const XState evolved = evolve_two_sided(x, pt.gamma);
    for (Strategy s : strategies) pt.reports.push_back(classical_correlation(evolved, s, inner));
    return pt;
  });
  return traj;
}

std::string_view to_string(TransitionKind k) {
  switch (k) {
    case TransitionKind::none: return "none";
    case TransitionKind::sudden: return "sudden";
    case TransitionKind::smooth: return "smooth";
  }
  return "unknown";
}

TransitionReport detect_transition(const Trajectory& traj, const TransitionOptions& opts) {
  TransitionReport rep;
  const auto& pts = traj.points;
  if (pts.size() < 2 || !(pts.front().chi_h > pts.front().chi_v)) return rep;

  std::size_t i = 0;
  while (i + 1 < pts.size() && pts[i + 1].chi_h > pts[i + 1].chi_v) ++i;
  if (i + 1 == pts.size()) return rep;

  const double rate = traj.spec.rate;
  auto diff = [&](double t) {
    const RMat r = to_pauli_rep(
        to_density(evolve_two_sided(traj.initial, std::exp(-rate * t))));
    const VonNeumannChi c = chi_hv(r);
    return c.horizontal - c.vertical;
  };
  double lo = pts[i].t;
  double hi = pts[i + 1].t;
  for (int it = 0; it < 100 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (diff(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double t_bar = 0.5 * (lo + hi);
  rep.t_bar = t_bar;

  const double delta = opts.window_steps * (pts[i + 1].t - pts[i].t);
  rep.window_lo = std::max(pts.front().t, t_bar - delta);
  rep.window_hi = std::min(pts.back().t, t_bar + delta);

  std::vector<double> ts;
  for (const auto& p : pts) {
    if (p.t >= rep.window_lo && p.t <= rep.window_hi) ts.push_back(p.t);
  }
  ts.push_back(t_bar);
  for (int k = 0; k < opts.window_samples; ++k) {
    ts.push_back(rep.window_lo +
                 (rep.window_hi - rep.window_lo) * k / std::max(1, opts.window_samples - 1));
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  const auto margins = map_indices<double>(opts.exec, ts.size(), [&](std::size_t k) {
    return trajectory_point(traj.initial, rate, ts[k]).margin;
  });
  rep.max_margin = *std::max_element(margins.begin(), margins.end());
  for (std::size_t k = 0; k < ts.size(); ++k) rep.margin_curve.emplace_back(ts[k], margins[k]);
  rep.kind = rep.max_margin <= opts.threshold ? TransitionKind::sudden : TransitionKind::smooth;
  return rep;
}

}  // namespace discord
