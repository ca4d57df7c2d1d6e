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

#ifndef PURIBOUND_SIMULATOR_HPP
#define PURIBOUND_SIMULATOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "puribound/bell.hpp"

namespace puribound {

/// Per-qubit noise inserted after each two-qubit gate.
///
/// depolarizing: with probability q apply X, Y or Z (q/3 each).
/// adversarial_xz: with probability q apply X on local-side qubits and Z on
/// remote-side qubits (the error pair the closed-form bound is built on).
struct GateNoiseSpec {
  enum class Model { none, depolarizing, adversarial_xz };

  Model model = Model::none;
  double q = 0.0;
  double measurement_flip = 0.0;

  GateNoiseSpec() = default;
  GateNoiseSpec(Model model_, double q_, double measurement_flip_ = 0.0);
};

enum class Protocol { bbpssw, dejmps };

Protocol parse_protocol(const std::string& label);
GateNoiseSpec::Model parse_noise_model(const std::string& label);

/// One purification round. A zero post-selection probability leaves `state`
/// empty (division guard) rather than producing weights.
struct RoundResult {
  double success_prob = 0.0;
  std::optional<BellDiagonal> state;
};

/// Exact 16x16 evolution of two Bell-diagonal pairs: protocol rotations,
/// bilateral controlled-NOTs with per-qubit noise after each gate,
/// computational-basis measurement of the second pair, post-selection on
/// coincident outcomes, and a fixed realignment Pauli on the survivor,
/// which is then twirled.
RoundResult purification_round(const BellDiagonal& a, const BellDiagonal& b,
                               const GateNoiseSpec& noise, Protocol protocol);

/// Noiseless Bell-diagonal recurrences, the independent cross-check of the
/// exact-matrix path.
RoundResult dejmps_recurrence(const BellDiagonal& state);
RoundResult bbpssw_recurrence(double f);

enum class Verdict { converged_up, converged_down, stationary };

struct RecursionTrace {
  std::vector<std::pair<double, double>> rounds;  // (fidelity, success_prob)
  Verdict verdict = Verdict::stationary;
  double final_fidelity = 0.0;
};

/// Iterates purification_round on identical copies: Werner-twirled between
/// rounds for bbpssw, Bell-diagonal carried for dejmps. Stops when the
/// fidelity moves by less than 1e-10 or after max_rounds. A division guard
/// mid-recursion raises SolverError.
RecursionTrace recurse_to_fixed_point(double f0, const GateNoiseSpec& noise,
                                      Protocol protocol, int max_rounds = 200);

/// Bisection in q over [0, 0.2] for the converged-up / not transition, to
/// 1e-5 in q. Empty when there is no transition in the interval (e.g. the
/// noiseless model purifies at both ends).
std::optional<double> protocol_threshold(GateNoiseSpec::Model model,
                                         Protocol protocol, double f0);

}  // namespace puribound

#endif  // PURIBOUND_SIMULATOR_HPP
