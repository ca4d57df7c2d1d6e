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

#ifndef PURIBOUND_NOISE_HPP
#define PURIBOUND_NOISE_HPP

#include <utility>
#include <vector>

#include "puribound/bell.hpp"

namespace puribound {

/// Preparation error probability p and gate error probability q.
struct NoiseParams {
  double p = 0.0;
  double q = 0.0;
};

/// Split of preparation and gate noise into fault and loss components.
struct LossParams {
  double p_loss = 0.0;
  double p_fault = 0.0;
  double q_l = 0.0;
  double q_f = 0.0;
};

/// Worst-case initial fidelity under independent per-qubit preparation
/// errors with probability p: (1-p)^2.
double fidelity_initial(double p);

/// Closed-form fidelity after the final gate errors on n combined copies:
/// (1 - 2q + 2q^2 + (1-2q)^(2n-1)) / 2. Real-valued n >= 1 is accepted;
/// q is restricted to [0, 1/2] where the form is monotone.
double fidelity_gate(double q, double n);

/// The same fidelity evaluated through the two binomial sums, integer n
/// only. Agrees with fidelity_gate to 1e-12.
double fidelity_gate_sum(double q, int n);

/// Exhaustive-enumeration oracle for the gate fidelity. Enumerates all
/// 2^(2n-2) error patterns on the measured-out qubits (each occurring with
/// probability q and propagating one fixed canceling-pair Pauli, the Y
/// class, to the surviving pair) together with the four occurrence patterns
/// of the direct errors (direct_left, direct_right) on the surviving pair,
/// reduces the net Pauli on the singlet modulo (s x I)|psi-> ~ (I x s)|psi->
/// and returns the probability-weighted singlet survival. Accepts the full
/// q in [0, 1] for diagnostics; n limited to [2, 8].
double fidelity_gate_oracle(double q, int n, Pauli direct_left, Pauli direct_right);

struct PairFidelity {
  TwoQubitPauli pair;
  double fidelity;
};

struct SurveyResult {
  std::vector<PairFidelity> pairs;   // all 9 direct-error choices, fixed order
  std::vector<double> distinct;      // ascending, deduplicated at 1e-12
  double min_fidelity = 1.0;
  double closed_form = 1.0;          // fidelity_gate(q, n) when q <= 1/2
};

/// Evaluates the oracle for all nine direct-error pairs. For q <= 1/2 the
/// minimum is checked against the closed form (mismatch beyond 1e-9 throws).
SurveyResult pauli_pair_survey(double q, int n);

/// Initial fidelity with loss: (1-p_loss)(1-p_fault)^2 + p_loss/4.
double loss_fidelity_initial(const LossParams& lp);

/// Gate fidelity with loss, exactly as printed:
/// q_l/4 + (1-2q_f)^(2n-1)(1-q_l)^(2n-1)/2 + (1-q_l)(1-2q_f+2q_f^2)/2.
double loss_fidelity_gate(const LossParams& lp, double n);

}  // namespace puribound

#endif  // PURIBOUND_NOISE_HPP
