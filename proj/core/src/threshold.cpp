// Copyright 2026 The Puribound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "puribound/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "puribound/rootfind.hpp"

namespace puribound {

namespace {

constexpr double kMaxN = 50.0;

// Net-Pauli class probabilities of the final-gate error channel acting on
// the surviving pair: identity carries fidelity_gate(q, n); the X and Z
// classes each carry one lone direct error; the Y class carries either both
// direct errors or a lone propagated odd parity.
struct GateClassProbs {
  double p_i, p_x, p_y, p_z;
};

GateClassProbs gate_class_probs(double q, double n) {
  const double p_even = 0.5 * (1.0 + std::pow(1.0 - 2.0 * q, 2.0 * n - 2.0));
  const double p_odd = 1.0 - p_even;
  GateClassProbs g{};
  g.p_i = fidelity_gate(q, n);
  g.p_x = q * (1.0 - q);
  g.p_z = g.p_x;
  g.p_y = q * q * p_even + (1.0 - q) * (1.0 - q) * p_odd;
  return g;
}

// F' under the adversarial-concentration model: the post-combination state
// is Bell-diagonal with fidelity f1 and all residual weight on the Bell
// state whose error class is least likely to map it back to the singlet.
double f_prime_model(double q, double n, double f1) {
  const auto g = gate_class_probs(q, n);
  const double p_min = std::min(g.p_x, std::min(g.p_y, g.p_z));
  return g.p_i * f1 + p_min * (1.0 - f1);
}

}  // namespace

double ApexPoint::residual_max() const {
  const double r1 = std::abs(eof(f_star) - 1.0 / n);
  const double r2 = std::abs(fidelity_initial(p) - f_star);
  const double r3 = std::abs(fidelity_gate(q, n) - f_star);
  return std::max(r1, std::max(r2, r3));
}

ApexPoint apex(double n) {
  if (!(n > 1.0)) throw std::domain_error("apex: n must exceed 1");
  ApexPoint a;
  a.n = n;
  a.f_star = eof_inverse(1.0 / n);
  a.p = 1.0 - std::sqrt(a.f_star);
  a.q = bisect([&](double q) { return fidelity_gate(q, n) - a.f_star; }, 0.0, 0.5, 1e-14);
  return a;
}

std::vector<ApexPoint> apex_scan(double n_min, double n_max, double step) {
  if (!(n_min > 1.0) || !(n_max >= n_min) || !(step > 0.0)) {
    throw std::domain_error("apex_scan: require 1 < n_min <= n_max and step > 0");
  }
  std::vector<ApexPoint> out;
  const int count = static_cast<int>(std::floor((n_max - n_min) / step + 1e-9)) + 1;
  for (int i = 0; i < count; ++i) {
    out.push_back(apex(n_min + static_cast<double>(i) * step));
  }
  return out;
}

ApexPoint max_apex(double tolerance) {
  if (!(tolerance > 0.0)) throw std::domain_error("max_apex: tolerance must be positive");
  const auto q_of = [](double n) { return apex(n).q; };
  // Coarse grid over (1, 50].
  const double n_lo = 1.02;
  const double step = 0.05;
  int best = 0;
  double best_q = -1.0;
  std::vector<double> grid;
  for (double n = n_lo; n <= kMaxN; n += step) grid.push_back(n);
  std::vector<double> qs(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    qs[i] = q_of(grid[i]);
    if (qs[i] > best_q) {
      best_q = qs[i];
      best = static_cast<int>(i);
    }
  }
  // Unimodality check around the coarse maximum; fall back to a fine grid
  // if the landscape looks irregular.
  bool unimodal = best > 0 && best + 1 < static_cast<int>(grid.size());
  if (!unimodal) {
    double fine_best_n = grid[static_cast<std::size_t>(best)];
    double fine_best_q = best_q;
    for (double n = n_lo; n <= kMaxN; n += 0.001) {
      const double q = q_of(n);
      if (q > fine_best_q) {
        fine_best_q = q;
        fine_best_n = n;
      }
    }
    return apex(fine_best_n);
  }
  const double lo = grid[static_cast<std::size_t>(best - 1)];
  const double hi = grid[static_cast<std::size_t>(best + 1)];
  const double n_star = golden_min([&](double n) { return -q_of(n); }, lo, hi, tolerance);
  return apex(n_star);
}

BoundaryCurve region_boundary(double n, const std::vector<double>& p_grid) {
  const ApexPoint a = apex(n);
  BoundaryCurve curve;
  curve.n = n;
  curve.branch = BoundaryBranch::below_apex;
  double prev_p = -1.0;
  for (double p : p_grid) {
    if (p > a.p + 1e-12) {
      throw std::domain_error("region_boundary: p beyond the apex for this branch");
    }
    if (p <= prev_p) throw std::domain_error("region_boundary: p grid must increase");
    prev_p = p;
    const double fp = fidelity_initial(p);
    const double q =
        bisect([&](double q) { return fidelity_gate(q, n) - fp; }, 0.0, 0.5, 1e-14);
    curve.points.emplace_back(p, q);
  }
  return curve;
}

BoundaryCurve region_boundary_above(double n, const std::vector<double>& p_grid,
                                    const std::string& model) {
  if (model != "adversarial-concentration") {
    throw std::domain_error("region_boundary_above: unrecognized model '" + model + "'");
  }
  const ApexPoint a = apex(n);
  const double p_max = ancilla_limit();
  BoundaryCurve curve;
  curve.n = n;
  curve.branch = BoundaryBranch::above_apex_model;
  double prev_p = -1.0;
  for (double p : p_grid) {
    if (p < a.p - 1e-12 || p > p_max + 1e-12) {
      throw std::domain_error("region_boundary_above: p outside [apex.p, 1 - 1/sqrt(2)]");
    }
    if (p <= prev_p) throw std::domain_error("region_boundary_above: p grid must increase");
    prev_p = p;
    const double fp = fidelity_initial(std::min(p, p_max));
    const double f1 = eof_inverse(std::min(1.0, n * eof(fp)));
    double q;
    if (f_prime_model(0.0, n, f1) <= fp) {
      q = 0.0;  // endpoint where no gate noise is tolerable
    } else {
      q = bisect([&](double qq) { return f_prime_model(qq, n, f1) - fp; }, 0.0, 0.5, 1e-14);
    }
    curve.points.emplace_back(p, q);
  }
  return curve;
}

std::vector<LossPoint> loss_tradeoff(const std::vector<double>& q_f_grid, double n_max) {
  if (!(n_max > 1.0)) throw std::domain_error("loss_tradeoff: n_max must exceed 1");
  std::vector<LossPoint> out;
  // The apex fidelity eof_inverse(1/n) does not depend on the noise rates,
  // so tabulate it once for the shared n grid.
  std::vector<double> n_grid;
  std::vector<double> f_star;
  for (double n = 1.005; n <= n_max + 1e-12; n += 0.005) {
    n_grid.push_back(n);
    f_star.push_back(eof_inverse(1.0 / n));
  }
  for (double q_f : q_f_grid) {
    if (q_f < 0.0 || q_f > 0.06) {
      throw std::domain_error("loss_tradeoff: q_f outside [0, 0.06]");
    }
    // Feasibility margin maximized over n; also reports the maximizing n.
    const auto margin = [&](double q_l) {
      double best = -1e9;
      double best_n = 0.0;
      for (std::size_t i = 0; i < n_grid.size(); ++i) {
        const double g = loss_fidelity_gate({0.0, 0.0, q_l, q_f}, n_grid[i]) - f_star[i];
        if (g > best) {
          best = g;
          best_n = n_grid[i];
        }
      }
      return std::make_pair(best, best_n);
    };
    LossPoint pt;
    pt.q_f = q_f;
    auto m0 = margin(0.0);
    if (m0.first < 0.0) {
      pt.q_l_max = 0.0;
      pt.n_star = m0.second;
    } else {
      double lo = 0.0, hi = 0.6;
      while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        if (margin(mid).first >= 0.0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      pt.q_l_max = 0.5 * (lo + hi);
      pt.n_star = margin(pt.q_l_max).second;
    }
    out.push_back(pt);
  }
  return out;
}

RepeaterMargin repeater_check(double q, double n) {
  if (!(n > 1.0)) throw std::domain_error("repeater_check: n must exceed 1");
  RepeaterMargin r;
  r.margin = eof(fidelity_gate(q, n)) - 1.0 / n;
  r.entanglement_preserved = r.margin >= 0.0;
  return r;
}

double ancilla_limit() { return 1.0 - 1.0 / std::sqrt(2.0); }

}  // namespace puribound
