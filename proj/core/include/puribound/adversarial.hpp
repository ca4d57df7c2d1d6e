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

#ifndef PURIBOUND_ADVERSARIAL_HPP
#define PURIBOUND_ADVERSARIAL_HPP

#include <array>
#include <functional>

#include "puribound/bell.hpp"

namespace puribound {

/// Single-qubit rotation exp(-i theta n.sigma) about a unit axis n.
struct UnitaryAxisAngle {
  double theta = 0.0;                     // radians in [0, pi]
  std::array<double, 3> axis = {0, 0, 1};  // unit 3-vector

  UnitaryAxisAngle() = default;
  UnitaryAxisAngle(double theta_, const std::array<double, 3>& axis_);

  Mat2 matrix() const;
};

/// One-sided unitary noise: (1-p) rho + p (U x 1) rho (U^dagger x 1),
/// built exactly as a 4x4 density matrix.
DensityMatrix4 unitary_noise_channel(const BellDiagonal& state, double p,
                                     const UnitaryAxisAngle& u);

/// Max absolute discrepancy between the twirl of the exact channel output
/// and the input weights mixed with Pauli flips at probabilities
/// p n_x^2 sin^2(theta), p n_y^2 sin^2(theta), p n_z^2 sin^2(theta).
double twirled_mixing_check(const BellDiagonal& state, double p,
                            const UnitaryAxisAngle& u);

struct WorstUnitaryResult {
  UnitaryAxisAngle u;
  double eof_min = 0.0;        // eof_general at the grid minimizer
  double pauli_eof_min = 0.0;  // min over the three closed-form Pauli flips
  int theta_index = 0;
  int polar_index = 0;
  int azimuth_index = 0;
  bool flat = false;  // p = 0: entanglement constant over the grid
};

/// Per-grid-point sink: (theta, polar, azimuth, eof_general).
using GridSink = std::function<void(double, double, double, double)>;

/// Minimizes eof_general(unitary_noise_channel(state, p, .)) over a
/// (theta, polar, azimuth) grid with inclusive poles. Ties within 1e-10
/// are broken lexicographically, which pins exact degeneracy circles to a
/// coordinate-axis grid point. `threads` <= 0 picks the hardware count;
/// the reduction order is deterministic either way.
WorstUnitaryResult worst_unitary_search(const BellDiagonal& state, double p,
                                        int theta_steps, int axis_steps,
                                        int threads = 1,
                                        const GridSink& sink = nullptr);

}  // namespace puribound

#endif  // PURIBOUND_ADVERSARIAL_HPP
