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

#include "puribound/adversarial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace puribound {

namespace {

constexpr double kTieTol = 1e-10;

BellDiagonal pauli_mixed(const BellDiagonal& state, double p, const UnitaryAxisAngle& u) {
  const double s2 = std::sin(u.theta) * std::sin(u.theta);
  const std::array<double, 3> probs = {p * u.axis[0] * u.axis[0] * s2,
                                       p * u.axis[1] * u.axis[1] * s2,
                                       p * u.axis[2] * u.axis[2] * s2};
  const auto& w = state.weights();
  std::array<double, 4> mixed;
  const double stay = 1.0 - probs[0] - probs[1] - probs[2];
  for (int i = 0; i < 4; ++i) mixed[static_cast<std::size_t>(i)] = stay * w[static_cast<std::size_t>(i)];
  static const Pauli flips[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (int k = 0; k < 3; ++k) {
    const auto& pw = pauli_apply(state, {flips[k], Pauli::I}).weights();
    for (int i = 0; i < 4; ++i)
      mixed[static_cast<std::size_t>(i)] += probs[static_cast<std::size_t>(k)] * pw[static_cast<std::size_t>(i)];
  }
  return BellDiagonal(mixed[0], mixed[1], mixed[2], mixed[3]);
}

}  // namespace

UnitaryAxisAngle::UnitaryAxisAngle(double theta_, const std::array<double, 3>& axis_)
    : theta(theta_), axis(axis_) {
  const double norm2 = axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2];
  if (std::abs(norm2 - 1.0) > 1e-12) {
    throw std::domain_error("UnitaryAxisAngle: axis is not unit norm");
  }
}

Mat2 UnitaryAxisAngle::matrix() const {
  const double c = std::cos(theta);
  const Complex is(0.0, std::sin(theta));
  Mat2 m;
  m(0, 0) = c - is * axis[2];
  m(0, 1) = -is * (axis[0] - Complex(0.0, 1.0) * axis[1]);
  m(1, 0) = -is * (axis[0] + Complex(0.0, 1.0) * axis[1]);
  m(1, 1) = c + is * axis[2];
  return m;
}

DensityMatrix4 unitary_noise_channel(const BellDiagonal& state, double p,
                                     const UnitaryAxisAngle& u) {
  if (p < 0.0 || p > 1.0) throw std::domain_error("unitary_noise_channel: p outside [0,1]");
  const Mat4 rho = DensityMatrix4::from_bell_diagonal(state).matrix();
  const Mat4 big = kron(u.matrix(), Mat2::identity());
  const Mat4 rotated = big * rho * big.adjoint();
  return DensityMatrix4((1.0 - p) * rho + p * rotated);
}

double twirled_mixing_check(const BellDiagonal& state, double p,
                            const UnitaryAxisAngle& u) {
  const auto exact = twirl(unitary_noise_channel(state, p, u)).weights();
  const auto mixed = pauli_mixed(state, p, u).weights();
  double res = 0.0;
  for (int i = 0; i < 4; ++i)
    res = std::max(res, std::abs(exact[static_cast<std::size_t>(i)] - mixed[static_cast<std::size_t>(i)]));
  return res;
}

WorstUnitaryResult worst_unitary_search(const BellDiagonal& state, double p,
                                        int theta_steps, int axis_steps,
                                        int threads, const GridSink& sink) {
  if (theta_steps < 16 || axis_steps < 16) {
    throw std::domain_error("worst_unitary_search: grid resolutions must be >= 16");
  }
  if (!(state.fidelity() > 0.5)) {
    throw std::domain_error("worst_unitary_search: state fidelity must exceed 1/2");
  }
  constexpr double pi = std::numbers::pi;

  WorstUnitaryResult result;
  if (p == 0.0) {
    result.flat = true;
    result.u = UnitaryAxisAngle(0.0, {0.0, 0.0, 1.0});
    result.eof_min = eof(state.fidelity());
    result.pauli_eof_min = result.eof_min;
    return result;
  }

  struct SliceBest {
    double eof = 1e300;
    int ip = 0;
    int ia = 0;
  };
  std::vector<SliceBest> slice_best(static_cast<std::size_t>(theta_steps));
  std::vector<std::vector<double>> slice_rows;
  if (sink) slice_rows.resize(static_cast<std::size_t>(theta_steps));

  const auto eval_slice = [&](int it) {
    const double theta = pi * static_cast<double>(it) / static_cast<double>(theta_steps - 1);
    SliceBest best;
    std::vector<double> unused;
    auto& rows = sink ? slice_rows[static_cast<std::size_t>(it)] : unused;
    if (sink) rows.reserve(static_cast<std::size_t>(axis_steps) * static_cast<std::size_t>(axis_steps) * 3);
    for (int ip = 0; ip < axis_steps; ++ip) {
      const double polar = pi * static_cast<double>(ip) / static_cast<double>(axis_steps - 1);
      for (int ia = 0; ia < axis_steps; ++ia) {
        const double azimuth = 2.0 * pi * static_cast<double>(ia) / static_cast<double>(axis_steps);
        std::array<double, 3> axis = {std::sin(polar) * std::cos(azimuth),
                                      std::sin(polar) * std::sin(azimuth),
                                      std::cos(polar)};
        const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
        for (auto& a : axis) a /= norm;
        const double e =
            eof_general(unitary_noise_channel(state, p, UnitaryAxisAngle(theta, axis)));
        if (sink) {
          rows.push_back(polar);
          rows.push_back(azimuth);
          rows.push_back(e);
        }
        if (e < best.eof - kTieTol) {
          best.eof = e;
          best.ip = ip;
          best.ia = ia;
        }
      }
    }
    slice_best[static_cast<std::size_t>(it)] = best;
  };

  int nthreads = threads;
  if (nthreads <= 0) nthreads = static_cast<int>(std::thread::hardware_concurrency());
  if (nthreads <= 1) {
    for (int it = 0; it < theta_steps; ++it) eval_slice(it);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) {
      pool.emplace_back([&, t] {
        for (int it = t; it < theta_steps; it += nthreads) eval_slice(it);
      });
    }
    for (auto& th : pool) th.join();
  }

  // The sink fires in natural theta order.
  if (sink) {
    for (int it = 0; it < theta_steps; ++it) {
      const double theta = pi * static_cast<double>(it) / static_cast<double>(theta_steps - 1);
      const auto& rows = slice_rows[static_cast<std::size_t>(it)];
      for (std::size_t r = 0; r + 2 < rows.size() + 1; r += 3) {
        sink(theta, rows[r], rows[r + 1], rows[r + 2]);
      }
    }
  }

  // Deterministic reduction, scanning theta outward from pi/2 so that exact
  // plateaus (entanglement driven to zero over a theta range) still report
  // the Pauli-point representative.
  std::vector<int> order(static_cast<std::size_t>(theta_steps));
  for (int it = 0; it < theta_steps; ++it) order[static_cast<std::size_t>(it)] = it;
  const auto dist = [&](int it) {
    const double theta = pi * static_cast<double>(it) / static_cast<double>(theta_steps - 1);
    return std::abs(theta - pi / 2.0);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return dist(a) < dist(b); });
  int best_it = order[0];
  double best_eof = 1e300;
  for (int it : order) {
    const auto& sb = slice_best[static_cast<std::size_t>(it)];
    if (sb.eof < best_eof - kTieTol) {
      best_eof = sb.eof;
      best_it = it;
    }
  }

  const auto& sb = slice_best[static_cast<std::size_t>(best_it)];
  const double theta = pi * static_cast<double>(best_it) / static_cast<double>(theta_steps - 1);
  const double polar = pi * static_cast<double>(sb.ip) / static_cast<double>(axis_steps - 1);
  const double azimuth = 2.0 * pi * static_cast<double>(sb.ia) / static_cast<double>(axis_steps);
  std::array<double, 3> axis = {std::sin(polar) * std::cos(azimuth),
                                std::sin(polar) * std::sin(azimuth), std::cos(polar)};
  const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  for (auto& a : axis) a /= norm;
  result.u = UnitaryAxisAngle(theta, axis);
  result.eof_min = sb.eof;
  result.theta_index = best_it;
  result.polar_index = sb.ip;
  result.azimuth_index = sb.ia;

  // Closed-form reference: the three Pauli flips at probability p.
  constexpr double half_pi = std::numbers::pi / 2.0;
  double pmin = 1e300;
  const std::array<std::array<double, 3>, 3> axes = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (const auto& a : axes) {
    const auto mixed = pauli_mixed(state, p, UnitaryAxisAngle(half_pi, a));
    double fmax = 0.0;
    for (double w : mixed.weights()) fmax = std::max(fmax, w);
    const double c = std::max(0.0, 2.0 * fmax - 1.0);
    pmin = std::min(pmin, binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c))));
  }
  result.pauli_eof_min = pmin;
  return result;
}

}  // namespace puribound
