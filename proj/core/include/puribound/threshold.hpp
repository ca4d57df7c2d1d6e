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

#ifndef PURIBOUND_THRESHOLD_HPP
#define PURIBOUND_THRESHOLD_HPP

#include <string>
#include <vector>

#include "puribound/noise.hpp"

namespace puribound {

/// Solution of the n-apex conditions: eof(f_star) = 1/n,
/// fidelity_initial(p) = f_star and fidelity_gate(q, n) = f_star.
struct ApexPoint {
  double n = 0.0;
  double p = 0.0;
  double q = 0.0;
  double f_star = 0.0;

  /// Largest of the three defining residuals; forward verification
  /// independent of the solver path.
  double residual_max() const;
};

enum class BoundaryBranch { below_apex, above_apex_model };

/// Ordered (p, q) samples of one branch of the purifiable-region boundary
/// for a fixed number of copies n.
struct BoundaryCurve {
  double n = 0.0;
  BoundaryBranch branch = BoundaryBranch::below_apex;
  std::vector<std::pair<double, double>> points;  // (p, q), p strictly increasing
};

struct LossPoint {
  double q_f = 0.0;
  double q_l_max = 0.0;
  double n_star = 0.0;  // maximizing copy count at the feasibility boundary
};

struct RepeaterMargin {
  bool entanglement_preserved = false;
  double margin = 0.0;  // eof(fidelity_gate(q, n)) - 1/n
};

/// Solves the n-apex for n > 1.
ApexPoint apex(double n);

/// Apex evaluated on the inclusive grid n_min, n_min+step, ..., n_max.
std::vector<ApexPoint> apex_scan(double n_min, double n_max, double step);

/// Maximizes apex(n).q over real n in (1, 50] — coarse grid plus
/// golden-section refinement; tolerance applies to n.
ApexPoint max_apex(double tolerance = 1e-10);

/// Below-apex boundary: q solving fidelity_gate(q, n) = fidelity_initial(p)
/// for each p in p_grid. Every p must not exceed apex(n).p.
BoundaryCurve region_boundary(double n, const std::vector<double>& p_grid);

/// Above-apex boundary under the documented adversarial-concentration
/// model (the only recognized model label). p values must lie between
/// apex(n).p and 1 - 1/sqrt(2).
BoundaryCurve region_boundary_above(double n, const std::vector<double>& p_grid,
                                    const std::string& model);

/// Largest tolerable loss rate q_l for each gate fault rate q_f, maximizing
/// the apex feasibility condition over n in (1, n_max].
std::vector<LossPoint> loss_tradeoff(const std::vector<double>& q_f_grid, double n_max);

/// Whether a repeater step at gate error q keeps the n-apex condition
/// eof(fidelity_gate(q, n)) >= 1/n, with the signed margin.
RepeaterMargin repeater_check(double q, double n);

/// The p at which even perfect gates cannot purify: (1-p)^2 = 1/2,
/// i.e. 1 - 1/sqrt(2).
double ancilla_limit();

}  // namespace puribound

#endif  // PURIBOUND_THRESHOLD_HPP
