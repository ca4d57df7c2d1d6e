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

#ifndef PURIBOUND_BELL_HPP
#define PURIBOUND_BELL_HPP

#include <array>

#include "puribound/matrix.hpp"

namespace puribound {

/// Single-qubit Pauli operator, phase ignored throughout.
enum class Pauli { I, X, Y, Z };

/// Product of two Paulis modulo phase.
Pauli pauli_mul(Pauli a, Pauli b);

/// A pair of Paulis acting on the two qubits of a Bell pair.
struct TwoQubitPauli {
  Pauli left = Pauli::I;
  Pauli right = Pauli::I;
};

/// Two-qubit state diagonal in the Bell basis, represented by its four
/// weights in the fixed order (psi-, phi-, psi+, phi+). The singlet weight
/// is the fidelity. Weights are validated on construction: tiny negative
/// values (>= -1e-12) are clamped to zero and the vector is renormalized;
/// anything worse is rejected.
class BellDiagonal {
 public:
  BellDiagonal(double w_psi_minus, double w_phi_minus, double w_psi_plus,
               double w_phi_plus);

  /// Werner state: weight f on the singlet, remainder spread equally.
  static BellDiagonal werner(double f);

  double fidelity() const { return w_[0]; }
  double w_psi_minus() const { return w_[0]; }
  double w_phi_minus() const { return w_[1]; }
  double w_psi_plus() const { return w_[2]; }
  double w_phi_plus() const { return w_[3]; }
  const std::array<double, 4>& weights() const { return w_; }

 private:
  std::array<double, 4> w_;
};

/// Exact 4x4 two-qubit density matrix, basis order |00>,|01>,|10>,|11>.
/// Construction validates Hermiticity (1e-12), unit trace (1e-12) and
/// positive semidefiniteness (eigenvalues >= -1e-10).
class DensityMatrix4 {
 public:
  explicit DensityMatrix4(const Mat4& m);

  /// Density matrix of a Bell-diagonal state.
  static DensityMatrix4 from_bell_diagonal(const BellDiagonal& state);

  const Mat4& matrix() const { return m_; }

 private:
  Mat4 m_;
};

/// The four Bell state vectors, order (psi-, phi-, psi+, phi+), amplitudes
/// over |00>,|01>,|10>,|11>.
const std::array<std::array<Complex, 4>, 4>& bell_basis();

/// Binary entropy H(x) = -x log2 x - (1-x) log2 (1-x), with H(0)=H(1)=0.
/// Rejects x outside [0, 1].
double binary_entropy(double x);

/// Entropy of formation of a Bell-diagonal state with singlet fidelity f:
/// H(1/2 + sqrt(f(1-f))) for f > 1/2, and 0 in the separable regime
/// f <= 1/2. Strictly increasing on [1/2, 1]. Rejects f outside [0, 1].
double eof(double f);

/// Unique f in [1/2, 1] with eof(f) = s, by bisection. Rejects s outside
/// [0, 1].
double eof_inverse(double s);

/// Diagonal of rho in the Bell basis — a mathematical projection, not a
/// physical channel. Preserves the singlet fidelity exactly.
BellDiagonal twirl(const DensityMatrix4& rho);

/// Bell-basis action of a two-qubit Pauli on a Bell-diagonal state: a
/// permutation of the four weights (phases discarded).
BellDiagonal pauli_apply(const BellDiagonal& state, const TwoQubitPauli& op);

/// Wootters concurrence: max(0, l1-l2-l3-l4) with l_i the decreasing square
/// roots of the eigenvalues of rho (Y(x)Y) rho* (Y(x)Y), computed through the
/// Hermitian-equivalent product sqrt(rho) (Y(x)Y) rho* (Y(x)Y) sqrt(rho).
double concurrence(const DensityMatrix4& rho);

/// Entropy of formation of an arbitrary two-qubit state,
/// H((1 + sqrt(1 - C^2))/2) with C = concurrence(rho). Agrees with eof(f)
/// on Bell-diagonal inputs of fidelity f >= 1/2.
double eof_general(const DensityMatrix4& rho);

}  // namespace puribound

#endif  // PURIBOUND_BELL_HPP
