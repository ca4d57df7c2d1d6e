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

#include "puribound/bell.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace puribound {

namespace {

constexpr double kWeightTol = 1e-12;

// GF(2)^2 encoding of the Pauli group modulo phase: (x, z) bits.
constexpr int pauli_bits(Pauli p) {
  switch (p) {
    case Pauli::I: return 0b00;
    case Pauli::X: return 0b10;
    case Pauli::Z: return 0b01;
    case Pauli::Y: return 0b11;
  }
  return 0;
}

constexpr Pauli pauli_from_bits(int b) {
  switch (b) {
    case 0b00: return Pauli::I;
    case 0b10: return Pauli::X;
    case 0b01: return Pauli::Z;
    default: return Pauli::Y;
  }
}

}  // namespace

Pauli pauli_mul(Pauli a, Pauli b) { return pauli_from_bits(pauli_bits(a) ^ pauli_bits(b)); }

BellDiagonal::BellDiagonal(double w_psi_minus, double w_phi_minus,
                           double w_psi_plus, double w_phi_plus)
    : w_{w_psi_minus, w_phi_minus, w_psi_plus, w_phi_plus} {
  double sum = 0.0;
  for (auto& w : w_) {
    if (w < -kWeightTol) {
      throw std::domain_error("BellDiagonal: negative weight " + std::to_string(w));
    }
    if (w < 0.0) w = 0.0;
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightTol) {
    throw std::domain_error("BellDiagonal: weights sum to " + std::to_string(sum));
  }
  for (auto& w : w_) w /= sum;
}

BellDiagonal BellDiagonal::werner(double f) {
  if (f < 0.0 || f > 1.0) throw std::domain_error("werner: fidelity outside [0,1]");
  const double r = (1.0 - f) / 3.0;
  return BellDiagonal(f, r, r, r);
}

const std::array<std::array<Complex, 4>, 4>& bell_basis() {
  static const double s = 1.0 / std::sqrt(2.0);
  static const std::array<std::array<Complex, 4>, 4> basis = {{
      {{0.0, s, -s, 0.0}},  // psi-
      {{s, 0.0, 0.0, -s}},  // phi-
      {{0.0, s, s, 0.0}},   // psi+
      {{s, 0.0, 0.0, s}},   // phi+
  }};
  return basis;
}

DensityMatrix4::DensityMatrix4(const Mat4& m) : m_(m) {
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (std::abs(m_(r, c) - std::conj(m_(c, r))) > 1e-12) {
        throw std::domain_error("DensityMatrix4: not Hermitian");
      }
    }
  }
  if (std::abs(m_.trace() - Complex{1.0}) > 1e-12) {
    throw std::domain_error("DensityMatrix4: trace != 1");
  }
  const auto e = eigh(m_);
  if (e.values[0] < -1e-10) {
    throw std::domain_error("DensityMatrix4: negative eigenvalue " +
                            std::to_string(e.values[0]));
  }
}

DensityMatrix4 DensityMatrix4::from_bell_diagonal(const BellDiagonal& state) {
  const auto& basis = bell_basis();
  Mat4 m;
  for (int k = 0; k < 4; ++k) {
    const double w = state.weights()[static_cast<std::size_t>(k)];
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        m(r, c) += w * basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] *
                   std::conj(basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)]);
  }
  return DensityMatrix4(m);
}

double binary_entropy(double x) {
  if (x < 0.0 || x > 1.0) throw std::domain_error("binary_entropy: x outside [0,1]");
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double eof(double f) {
  if (f < 0.0 || f > 1.0) throw std::domain_error("eof: fidelity outside [0,1]");
  if (f <= 0.5) return 0.0;
  return binary_entropy(0.5 + std::sqrt(f * (1.0 - f)));
}

double eof_inverse(double s) {
  if (s < 0.0 || s > 1.0) throw std::domain_error("eof_inverse: entropy outside [0,1]");
  if (s <= 0.0) return 0.5;
  if (s >= 1.0) return 1.0;
  double lo = 0.5, hi = 1.0;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (eof(mid) < s) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

BellDiagonal twirl(const DensityMatrix4& rho) {
  const auto& basis = bell_basis();
  std::array<double, 4> w{};
  for (int k = 0; k < 4; ++k) {
    Complex v = 0.0;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        v += std::conj(basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)]) *
             rho.matrix()(r, c) * basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
    w[static_cast<std::size_t>(k)] = v.real();
  }
  return BellDiagonal(w[0], w[1], w[2], w[3]);
}

BellDiagonal pauli_apply(const BellDiagonal& state, const TwoQubitPauli& op) {
  // A one-sided Pauli permutes the Bell weights identically from either
  // side, so the pair acts as the single product Pauli (phase dropped).
  const Pauli net = pauli_mul(op.left, op.right);
  const auto& w = state.weights();
  switch (net) {
    case Pauli::I: return state;
    case Pauli::X: return BellDiagonal(w[1], w[0], w[3], w[2]);  // psi- <-> phi-
    case Pauli::Z: return BellDiagonal(w[2], w[3], w[0], w[1]);  // psi- <-> psi+
    case Pauli::Y: return BellDiagonal(w[3], w[2], w[1], w[0]);  // psi- <-> phi+
  }
  return state;
}

double concurrence(const DensityMatrix4& rho) {
  static const Mat4 yy = [] {
    Mat2 y;
    y(0, 1) = Complex(0.0, -1.0);
    y(1, 0) = Complex(0.0, 1.0);
    return kron(y, y);
  }();
  const Mat4& r = rho.matrix();
  const Mat4 rt = yy * r.conjugate() * yy;  // spin-flipped state
  const Mat4 s = sqrt_psd(r);
  // Hermitian PSD matrix with the same spectrum as r * rt.
  const Mat4 m = s * rt * s;
  const auto e = eigh(m);
  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i)
    lam[static_cast<std::size_t>(i)] =
        std::sqrt(std::max(0.0, e.values[static_cast<std::size_t>(3 - i)]));
  const double c = lam[0] - lam[1] - lam[2] - lam[3];
  return std::max(0.0, c);
}

double eof_general(const DensityMatrix4& rho) {
  const double c = concurrence(rho);
  const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
  return binary_entropy(x);
}

}  // namespace puribound
