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

#include "puribound/simulator.hpp"

#include <cmath>
#include <stdexcept>

namespace puribound {

namespace {

constexpr double kPostSelectGuard = 1e-14;

// Qubit layout: 0 = Alice kept, 1 = Bob kept, 2 = Alice measured,
// 3 = Bob measured; qubit 0 is the most significant index bit.

Mat2 sigma_x() {
  Mat2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Mat2 sigma_y() {
  Mat2 m;
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

Mat2 sigma_z() {
  Mat2 m;
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

// exp(-i (pi/4) X) and its inverse, the DEJMPS local rotations.
Mat2 rx_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  Mat2 m;
  m(0, 0) = s;
  m(0, 1) = Complex(0.0, -s);
  m(1, 0) = Complex(0.0, -s);
  m(1, 1) = s;
  return m;
}

Mat2 rx_minus() { return rx_plus().adjoint(); }

Mat16 op_on(int qubit, const Mat2& u) {
  Mat16 out;
  const int shift = 3 - qubit;
  for (int r = 0; r < 16; ++r) {
    for (int c = 0; c < 16; ++c) {
      if ((r & ~(1 << shift)) != (c & ~(1 << shift))) continue;
      out(r, c) = u((r >> shift) & 1, (c >> shift) & 1);
    }
  }
  return out;
}

Mat16 cnot(int control, int target) {
  Mat16 m;
  const int cs = 3 - control;
  const int ts = 3 - target;
  for (int i = 0; i < 16; ++i) {
    const int j = ((i >> cs) & 1) ? (i ^ (1 << ts)) : i;
    m(j, i) = 1.0;
  }
  return m;
}

void apply_unitary(Mat16& rho, const Mat16& u) { rho = u * rho * u.adjoint(); }

void apply_qubit_noise(Mat16& rho, const GateNoiseSpec& noise, int qubit) {
  if (noise.model == GateNoiseSpec::Model::none || noise.q == 0.0) return;
  const double q = noise.q;
  Mat16 out;
  if (noise.model == GateNoiseSpec::Model::depolarizing) {
    const Mat16 kx = op_on(qubit, sigma_x());
    const Mat16 ky = op_on(qubit, sigma_y());
    const Mat16 kz = op_on(qubit, sigma_z());
    out = (1.0 - q) * rho + (q / 3.0) * (kx * rho * kx.adjoint() +
                                         ky * rho * ky.adjoint() +
                                         kz * rho * kz.adjoint());
  } else {
    // adversarial_xz: X on Alice's qubits (0, 2), Z on Bob's (1, 3).
    const bool alice = (qubit % 2) == 0;
    const Mat16 k = op_on(qubit, alice ? sigma_x() : sigma_z());
    out = (1.0 - q) * rho + q * (k * rho * k.adjoint());
  }
  rho = out;
}

// Partial trace over the measured qubits (2, 3), the two least significant
// index bits.
Mat4 trace_out_measured(const Mat16& rho) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r(i, j) += rho(i * 4 + k, j * 4 + k);
  return r;
}

Mat16 outcome_projector(int m2, int m3) {
  Mat2 p2, p3;
  p2(m2, m2) = 1.0;
  p3(m3, m3) = 1.0;
  return op_on(2, p2) * op_on(3, p3);
}

}  // namespace

GateNoiseSpec::GateNoiseSpec(Model model_, double q_, double measurement_flip_)
    : model(model_), q(q_), measurement_flip(measurement_flip_) {
  if (q < 0.0 || q > 1.0) throw std::domain_error("GateNoiseSpec: q outside [0,1]");
  if (measurement_flip < 0.0 || measurement_flip > 1.0) {
    throw std::domain_error("GateNoiseSpec: measurement_flip outside [0,1]");
  }
}

Protocol parse_protocol(const std::string& label) {
  if (label == "bbpssw") return Protocol::bbpssw;
  if (label == "dejmps") return Protocol::dejmps;
  throw std::domain_error("unrecognized protocol '" + label + "'");
}

GateNoiseSpec::Model parse_noise_model(const std::string& label) {
  if (label == "none") return GateNoiseSpec::Model::none;
  if (label == "depolarizing") return GateNoiseSpec::Model::depolarizing;
  if (label == "adversarial-xz") return GateNoiseSpec::Model::adversarial_xz;
  throw std::domain_error("unrecognized noise model '" + label + "'");
}

RoundResult purification_round(const BellDiagonal& a, const BellDiagonal& b,
                               const GateNoiseSpec& noise, Protocol protocol) {
  Mat16 rho = kron(DensityMatrix4::from_bell_diagonal(a).matrix(),
                   DensityMatrix4::from_bell_diagonal(b).matrix());

  if (protocol == Protocol::dejmps) {
    apply_unitary(rho, op_on(0, rx_plus()));
    apply_unitary(rho, op_on(2, rx_plus()));
    apply_unitary(rho, op_on(1, rx_minus()));
    apply_unitary(rho, op_on(3, rx_minus()));
  }

  const int gates[2][2] = {{0, 2}, {1, 3}};
  for (const auto& g : gates) {
    apply_unitary(rho, cnot(g[0], g[1]));
    apply_qubit_noise(rho, noise, g[0]);
    apply_qubit_noise(rho, noise, g[1]);
  }

  // Post-select on reported-coincident outcomes; measurement flips turn the
  // sharp coincidence into a weighting of the four true-outcome branches.
  const double f = noise.measurement_flip;
  const double w_same = (1.0 - f) * (1.0 - f) + f * f;
  const double w_diff = 2.0 * f * (1.0 - f);
  Mat4 kept;
  for (int m2 = 0; m2 < 2; ++m2) {
    for (int m3 = 0; m3 < 2; ++m3) {
      const double w = (m2 == m3) ? w_same : w_diff;
      if (w == 0.0) continue;
      const Mat16 p = outcome_projector(m2, m3);
      kept = kept + w * trace_out_measured(p * rho * p);
    }
  }

  RoundResult res;
  res.success_prob = kept.trace().real();
  if (res.success_prob < kPostSelectGuard) {
    res.success_prob = 0.0;
    return res;
  }
  kept = (1.0 / res.success_prob) * kept;

  BellDiagonal w = twirl(DensityMatrix4(kept));
  // Fixed realignment Pauli on Alice's kept qubit, restoring the singlet as
  // the dominant weight: Z for bbpssw, Y for dejmps.
  if (protocol == Protocol::bbpssw) {
    res.state = pauli_apply(w, {Pauli::Z, Pauli::I});
  } else {
    res.state = pauli_apply(w, {Pauli::Y, Pauli::I});
  }
  return res;
}

RoundResult dejmps_recurrence(const BellDiagonal& state) {
  const double a = state.w_psi_minus();
  const double b = state.w_phi_minus();
  const double c = state.w_psi_plus();
  const double d = state.w_phi_plus();
  RoundResult res;
  res.success_prob = (a + d) * (a + d) + (b + c) * (b + c);
  if (res.success_prob < kPostSelectGuard) {
    res.success_prob = 0.0;
    return res;
  }
  const double n = res.success_prob;
  res.state = BellDiagonal((a * a + d * d) / n, (b * b + c * c) / n,
                           2.0 * a * d / n, 2.0 * b * c / n);
  return res;
}

RoundResult bbpssw_recurrence(double f) {
  const double g = (1.0 - f) / 3.0;
  RoundResult res;
  res.success_prob = f * f + 2.0 * f * g + 5.0 * g * g;
  if (res.success_prob < kPostSelectGuard) {
    res.success_prob = 0.0;
    return res;
  }
  const double fp = (f * f + g * g) / res.success_prob;
  res.state = BellDiagonal::werner(fp);
  return res;
}

RecursionTrace recurse_to_fixed_point(double f0, const GateNoiseSpec& noise,
                                      Protocol protocol, int max_rounds) {
  if (f0 < 0.25 || f0 > 1.0) {
    throw std::domain_error("recurse_to_fixed_point: f0 outside [1/4, 1]");
  }
  if (max_rounds < 1 || max_rounds > 200) {
    throw std::domain_error("recurse_to_fixed_point: max_rounds outside [1, 200]");
  }
  RecursionTrace trace;
  BellDiagonal w = BellDiagonal::werner(f0);
  double fid = f0;
  for (int i = 0; i < max_rounds; ++i) {
    const BellDiagonal in =
        (protocol == Protocol::bbpssw) ? BellDiagonal::werner(fid) : w;
    const RoundResult r = purification_round(in, in, noise, protocol);
    if (!r.state) {
      throw SolverError("recurse_to_fixed_point: post-selection probability vanished");
    }
    const double next = r.state->fidelity();
    trace.rounds.emplace_back(next, r.success_prob);
    w = *r.state;
    const bool settled = std::abs(next - fid) < 1e-10;
    fid = next;
    if (settled) break;
  }
  trace.final_fidelity = fid;
  if (std::abs(fid - f0) < 1e-6) {
    trace.verdict = Verdict::stationary;
  } else if (fid > f0) {
    trace.verdict = Verdict::converged_up;
  } else {
    trace.verdict = Verdict::converged_down;
  }
  return trace;
}

std::optional<double> protocol_threshold(GateNoiseSpec::Model model,
                                         Protocol protocol, double f0) {
  if (!(f0 > 0.5)) throw std::domain_error("protocol_threshold: f0 must exceed 1/2");
  const auto purifies = [&](double q) {
    const GateNoiseSpec noise(model, q);
    return recurse_to_fixed_point(f0, noise, protocol).verdict == Verdict::converged_up;
  };
  double lo = 0.0, hi = 0.2;
  if (!purifies(lo) || purifies(hi)) return std::nullopt;
  while (hi - lo > 1e-5) {
    const double mid = 0.5 * (lo + hi);
    if (purifies(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace puribound
