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

#include "discord/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "discord/error.hpp"
#include "discord/optimize.hpp"

namespace discord {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::hv: return "hv-vn";
    case Strategy::three: return "three-element";
    case Strategy::brute: return "brute-force";
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "hv" || name == "hv-vn") return Strategy::hv;
  if (name == "three" || name == "three-element") return Strategy::three;
  if (name == "brute" || name == "brute-force") return Strategy::brute;
  throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + std::string(name) + "'");
}

std::string_view to_string(CrossingKind k) {
  switch (k) {
    case CrossingKind::none: return "none";
    case CrossingKind::point: return "point";
    case CrossingKind::degenerate: return "degenerate";
    case CrossingKind::multiple: return "multiple";
  }
  return "unknown";
}

double mutual_information(const XState& x) {
  const CMat4 rho = to_density(x);
  return von_neumann_entropy(reduced_a(x)) + von_neumann_entropy(reduced_b(x)) -
         von_neumann_entropy(rho);
}

CorrelationReport classical_correlation(const XState& x, Strategy strategy,
                                        const BruteForceOptions& brute) {
  const RMat r = to_pauli_rep(to_density(x));
  CorrelationReport rep;
  rep.strategy = strategy;
  rep.mutual_info = mutual_information(x);
  switch (strategy) {
    case Strategy::hv: {
      const VonNeumannChi chi = chi_hv(r);
      const bool horizontal = chi.horizontal >= chi.vertical;
      rep.classical = chi.best();
      rep.theta = horizontal ? std::numbers::pi / 2 : 0.0;
      rep.povm = (horizontal ? vn_horizontal() : vn_vertical()).elements();
      break;
    }
    case Strategy::three: {
      const ThreeElementOptimum opt = optimize_three(r);
      rep.classical = opt.chi;
      rep.theta = opt.theta;
      rep.apex = opt.apex;
      rep.povm = three_element_family(opt.theta, opt.apex).elements();
      break;
    }
    case Strategy::brute: {
      const BruteForceResult res = brute_force_optimize(r, brute);
      rep.classical = res.chi;
      rep.povm = res.elements;
      break;
    }
  }
  rep.discord = rep.mutual_info - rep.classical;
  return rep;
}

VonNeumannChi chi_at_z(const FilterFamily& fam, double z) {
  const XState s = fam.state_at(fam.xi_at(z, 0.0));
  return chi_hv(to_pauli_rep(to_density(s)));
}

namespace {

void check_chord_geometry(const XState& x) {
  const SteeringEllipsoid e = ellipsoid_params(x);
  if (!(e.l3 > 1e-12)) {
    throw Error(ErrorCode::DegenerateMarginal, "ellipsoid has no vertical extent");
  }
}

std::vector<double> interior_grid(double lo, double hi, int n) {
  std::vector<double> z(n);
  for (int i = 0; i < n; ++i) z[i] = lo + (hi - lo) * (i + 1) / (n + 1);
  return z;
}

// Indices of the upper concave hull of (z_i, y_i), z increasing.
std::vector<int> upper_hull(const std::vector<double>& z, const std::vector<double>& y) {
  std::vector<int> h;
  for (int i = 0; i < static_cast<int>(z.size()); ++i) {
    while (h.size() >= 2) {
      const int o = h[h.size() - 2];
      const int a = h.back();
      const double cross = (z[a] - z[o]) * (y[i] - y[o]) - (y[a] - y[o]) * (z[i] - z[o]);
      if (cross >= 0.0) {
        h.pop_back();
      } else {
        break;
      }
    }
    h.push_back(i);
  }
  return h;
}

}  // namespace

std::vector<ChiCurvePoint> chi_curves(const XState& x, const ChiCurveOptions& opts) {
  check_chord_geometry(x);
  if (opts.grid < 1) throw Error(ErrorCode::InvalidArgument, "grid must be positive");
  const FilterFamily fam(x);
  const std::vector<double> zs = interior_grid(fam.z_min(), fam.z_max(), opts.grid);
  return map_indices<ChiCurvePoint>(opts.exec, zs.size(), [&](std::size_t i) {
    ChiCurvePoint pt;
    pt.z = zs[i];
    pt.xi = fam.xi_at(pt.z, 0.0);
    const RMat r = to_pauli_rep(to_density(fam.state_at(pt.xi)));
    const VonNeumannChi chi = chi_hv(r);
    pt.chi_h = chi.horizontal;
    pt.chi_v = chi.vertical;
    pt.chi_3 = opts.with_three ? optimize_three(r).chi : std::max(pt.chi_h, pt.chi_v);
    return pt;
  });
}

Crossing find_crossing(const XState& x, int grid, Exec exec) {
  const auto pts = chi_curves(x, {grid, false, exec});
  const FilterFamily fam(x);

  Crossing out;
  double worst = 0.0;
  for (const auto& p : pts) worst = std::max(worst, std::abs(p.chi_h - p.chi_v));
  if (worst <= kDegenerateCurveTol) {
    out.kind = CrossingKind::degenerate;
    return out;
  }

  auto diff = [&](double z) {
    const VonNeumannChi c = chi_at_z(fam, z);
    return c.horizontal - c.vertical;
  };
  constexpr double kZero = 1e-13;
  int last = -1;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    const double d = pts[i].chi_h - pts[i].chi_v;
    if (std::abs(d) <= kZero) continue;
    if (last >= 0 && (d > 0.0) != (pts[last].chi_h - pts[last].chi_v > 0.0)) {
      double lo = pts[last].z;
      double hi = pts[i].z;
      const bool lo_positive = pts[last].chi_h - pts[last].chi_v > 0.0;
      for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((diff(mid) > 0.0) == lo_positive) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      out.roots.push_back(0.5 * (lo + hi));
    }
    last = i;
  }
  if (out.roots.empty()) {
    out.kind = CrossingKind::none;
  } else if (out.roots.size() == 1) {
    out.kind = CrossingKind::point;
    out.z_bar = out.roots.front();
  } else {
    out.kind = CrossingKind::multiple;
    out.z_bar = out.roots.front();
  }
  return out;
}

TangentInterval tangent_interval(const XState& x, int grid, Exec exec) {
  const Crossing cross = find_crossing(x, grid, exec);
  TangentInterval out;
  if (cross.kind == CrossingKind::degenerate) return out;
  if (cross.kind != CrossingKind::point) {
    throw Error(ErrorCode::NoCrossing,
                std::string("crossing kind is ") + std::string(to_string(cross.kind)));
  }
  out.z_bar = cross.z_bar;
  const FilterFamily fam(x);
  const double zmin = fam.z_min();
  const double zmax = fam.z_max();
  const int n = std::max(grid, 257);

  // Zoom until the bridge over z_bar spans a healthy number of grid points.
  double half = 0.5 * (zmax - zmin);
  double z1 = out.z_bar;
  double z2 = out.z_bar;
  double step = 0.0;
  bool found = false;
  for (int it = 0; it < 60 && half > 1e-14; ++it) {
    const double wlo = std::max(zmin, out.z_bar - half);
    const double whi = std::min(zmax, out.z_bar + half);
    const std::vector<double> zs = interior_grid(wlo, whi, n);
    const std::vector<double> ys = map_indices<double>(exec, zs.size(), [&](std::size_t i) {
      return chi_at_z(fam, zs[i]).best();
    });
    const std::vector<int> hull = upper_hull(zs, ys);
    int k = -1;
    for (int j = 0; j + 1 < static_cast<int>(hull.size()); ++j) {
      if (zs[hull[j]] <= out.z_bar && out.z_bar <= zs[hull[j + 1]]) {
        k = j;
        break;
      }
    }
    if (k < 0) {
      half *= 4.0;
      continue;
    }
    const int a = hull[k];
    const int b = hull[k + 1];
    const bool clipped = (a == 0 && wlo > zmin) || (b == n - 1 && whi < zmax);
    if (clipped) {
      half *= 4.0;
      continue;
    }
    if (b - a <= 1) {
      half /= 8.0;
      continue;
    }
    z1 = zs[a];
    z2 = zs[b];
    step = (whi - wlo) / (n + 1);
    found = true;
    if (b - a >= 32) break;
    half = 2.0 * (z2 - z1);
  }
  if (!found) {
    out.exists = true;
    out.z1 = out.z_bar;
    out.z2 = out.z_bar;
    return out;
  }

  // Common tangent: z1 minimizes the slope from N = (z2, f_R(z2)) to f_L,
  // z2 maximizes the slope from M = (z1, f_L(z1)) to f_R.
  const VonNeumannChi at1 = chi_at_z(fam, z1);
  const VonNeumannChi at2 = chi_at_z(fam, z2);
  const bool left_h = at1.horizontal >= at1.vertical;
  const bool right_h = at2.horizontal >= at2.vertical;
  auto pick = [&](bool h, double z) {
    const VonNeumannChi c = chi_at_z(fam, z);
    return h ? c.horizontal : c.vertical;
  };
  const double tol = 1e-13;
  for (int it = 0; it < 40; ++it) {
    const double old1 = z1;
    const double old2 = z2;
    const double f2 = pick(right_h, z2);
    z1 = golden_section_minimize(
             [&](double z) { return (f2 - pick(left_h, z)) / (z2 - z); },
             std::max(zmin + step, z1 - 2 * step), std::min(out.z_bar, z1 + 2 * step), tol)
             .x;
    const double f1 = pick(left_h, z1);
    z2 = golden_section_maximize(
             [&](double z) { return (pick(right_h, z) - f1) / (z - z1); },
             std::max(out.z_bar, z2 - 2 * step), std::min(zmax - step, z2 + 2 * step), tol)
             .x;
    if (std::abs(z1 - old1) < 1e-12 && std::abs(z2 - old2) < 1e-12) break;
  }
  out.exists = true;
  out.z1 = z1;
  out.z2 = z2;
  return out;
}

}  // namespace discord
