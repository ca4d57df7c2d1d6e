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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "puribound/adversarial.hpp"

using namespace puribound;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("axis-angle validation and matrix") {
  CHECK_THROWS_AS(UnitaryAxisAngle(0.5, {1.0, 1.0, 0.0}), std::domain_error);
  const UnitaryAxisAngle id(0.0, {0.0, 0.0, 1.0});
  CHECK((id.matrix() - Mat2::identity()).max_abs() <= 1e-15);
  const UnitaryAxisAngle u(0.3, {1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0)});
  CHECK((u.matrix() * u.matrix().adjoint() - Mat2::identity()).max_abs() <= 1e-14);
}

TEST_CASE("identity and zero-probability channels are no-ops") {
  const BellDiagonal st(0.8, 0.1, 0.06, 0.04);
  const Mat4 in = DensityMatrix4::from_bell_diagonal(st).matrix();
  const UnitaryAxisAngle id(0.0, {0.0, 0.0, 1.0});
  CHECK((unitary_noise_channel(st, 0.3, id).matrix() - in).max_abs() <= 1e-14);
  const UnitaryAxisAngle u(1.1, {0.0, 1.0, 0.0});
  CHECK((unitary_noise_channel(st, 0.0, u).matrix() - in).max_abs() <= 1e-14);
}

TEST_CASE("half-turn about x is the X flip") {
  const BellDiagonal singlet(1.0, 0.0, 0.0, 0.0);
  const UnitaryAxisAngle u(kPi / 2.0, {1.0, 0.0, 0.0});
  const auto w = twirl(unitary_noise_channel(singlet, 0.1, u)).weights();
  CHECK(w[0] == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(w[1] == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(w[2] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(w[3] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("twirled channel equals the Pauli mixing formula") {
  const double s3 = 1.0 / std::sqrt(3.0);
  CHECK(twirled_mixing_check(BellDiagonal::werner(0.85), 0.2,
                             UnitaryAxisAngle(kPi / 4.0, {0.0, 0.0, 1.0})) <= 1e-10);
  CHECK(twirled_mixing_check(BellDiagonal::werner(0.85), 0.2,
                             UnitaryAxisAngle(0.0, {0.0, 0.0, 1.0})) <= 1e-14);
  CHECK(twirled_mixing_check(BellDiagonal::werner(0.7), 0.3,
                             UnitaryAxisAngle(kPi / 2.0, {s3, s3, s3})) <= 1e-10);

  // Spot grid across angles, axes and states.
  for (int it = 0; it < 10; ++it) {
    for (int ip = 0; ip < 10; ++ip) {
      for (int ia = 0; ia < 10; ++ia) {
        const double theta = kPi * it / 9.0;
        const double polar = kPi * ip / 9.0;
        const double az = 2.0 * kPi * ia / 10.0;
        const UnitaryAxisAngle u(theta, {std::sin(polar) * std::cos(az),
                                         std::sin(polar) * std::sin(az),
                                         std::cos(polar)});
        CHECK(twirled_mixing_check(BellDiagonal(0.7, 0.15, 0.1, 0.05), 0.25, u) <= 1e-10);
      }
    }
  }
}

TEST_CASE("worst unitary is a Pauli point") {
  for (double f : {0.6, 0.75, 0.9, 0.99}) {
    for (double p : {0.05, 0.1, 0.3}) {
      const auto res = worst_unitary_search(BellDiagonal::werner(f), p, 16, 16);
      CHECK_FALSE(res.flat);
      // theta within one grid step of pi/2.
      CHECK(std::abs(res.u.theta - kPi / 2.0) <= kPi / 15.0 + 1e-12);
      // axis within one grid step of a coordinate axis.
      double best_align = 0.0;
      for (int k = 0; k < 3; ++k) {
        best_align = std::max(best_align, std::abs(res.u.axis[static_cast<std::size_t>(k)]));
      }
      CHECK(best_align >= std::cos(kPi / 15.0) - 1e-12);
      // The grid minimum cannot undercut the exact Pauli minimum.
      CHECK(res.eof_min >= res.pauli_eof_min - 1e-12);
      CHECK(res.eof_min <= res.pauli_eof_min + 5e-2);
    }
  }
}

TEST_CASE("exact Pauli point attains the twirled lower bound") {
  for (double f : {0.6, 0.75, 0.9, 0.99}) {
    for (double p : {0.05, 0.1, 0.3}) {
      const auto res = worst_unitary_search(BellDiagonal::werner(f), p, 16, 16);
      std::array<double, 3> axis = {0.0, 0.0, 0.0};
      int k = 0;
      for (int i = 1; i < 3; ++i) {
        if (std::abs(res.u.axis[static_cast<std::size_t>(i)]) >
            std::abs(res.u.axis[static_cast<std::size_t>(k)]))
          k = i;
      }
      axis[static_cast<std::size_t>(k)] = 1.0;
      const auto rho = unitary_noise_channel(BellDiagonal::werner(f), p,
                                             UnitaryAxisAngle(kPi / 2.0, axis));
      CHECK(std::abs(eof_general(rho) - eof(twirl(rho).fidelity())) <= 1e-8);
    }
  }
}

TEST_CASE("flat landscape at p = 0") {
  const auto res = worst_unitary_search(BellDiagonal::werner(0.8), 0.0, 16, 16);
  CHECK(res.flat);
  CHECK(res.eof_min == doctest::Approx(eof(0.8)).epsilon(1e-12));
}

TEST_CASE("entanglement lower bound holds across the grid") {
  const BellDiagonal st = BellDiagonal::werner(0.85);
  const double p = 0.12;
  int violations = 0;
  worst_unitary_search(st, p, 16, 16, 1,
                       [&](double theta, double polar, double azimuth, double e) {
                         const UnitaryAxisAngle u(
                             theta, {std::sin(polar) * std::cos(azimuth),
                                     std::sin(polar) * std::sin(azimuth), std::cos(polar)});
                         const auto rho = unitary_noise_channel(st, p, u);
                         if (e < eof(twirl(rho).fidelity()) - 1e-9) ++violations;
                       });
  CHECK(violations == 0);
}

TEST_CASE("grid preconditions") {
  CHECK_THROWS_AS(worst_unitary_search(BellDiagonal::werner(0.9), 0.1, 8, 16),
                  std::domain_error);
  CHECK_THROWS_AS(worst_unitary_search(BellDiagonal::werner(0.4), 0.1, 16, 16),
                  std::domain_error);
}

TEST_CASE("threaded search matches the serial result") {
  const auto serial = worst_unitary_search(BellDiagonal::werner(0.9), 0.1, 17, 16, 1);
  const auto threaded = worst_unitary_search(BellDiagonal::werner(0.9), 0.1, 17, 16, 4);
  CHECK(serial.theta_index == threaded.theta_index);
  CHECK(serial.polar_index == threaded.polar_index);
  CHECK(serial.azimuth_index == threaded.azimuth_index);
  CHECK(serial.eof_min == threaded.eof_min);
}
