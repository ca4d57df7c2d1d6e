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

#include "puribound/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace puribound {

namespace {

void check_prob(double v, const char* name) {
  if (v < 0.0 || v > 1.0) {
    throw std::domain_error(std::string(name) + " outside [0,1]");
  }
}

double binom(int n, int k) {
  // Exact for the small arguments used here.
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(r);
}

}  // namespace

double fidelity_initial(double p) {
  check_prob(p, "p");
  return (1.0 - p) * (1.0 - p);
}

double fidelity_gate(double q, double n) {
  if (q < 0.0 || q > 0.5) throw std::domain_error("fidelity_gate: q outside [0, 1/2]");
  if (n < 1.0) throw std::domain_error("fidelity_gate: n < 1");
  return 0.5 * (1.0 - 2.0 * q + 2.0 * q * q + std::pow(1.0 - 2.0 * q, 2.0 * n - 1.0));
}

double fidelity_gate_sum(double q, int n) {
  check_prob(q, "q");
  if (n < 1) throw std::domain_error("fidelity_gate_sum: n < 1");
  double even = 0.0;
  for (int m = 0; m <= n - 1; ++m) {
    even += binom(2 * n - 2, 2 * m) * std::pow(q, 2 * m) * std::pow(1.0 - q, 2 * n - 2 * m - 2);
  }
  double odd = 0.0;
  for (int m = 0; m <= n - 2; ++m) {
    odd += binom(2 * n - 2, 2 * m + 1) * std::pow(q, 2 * m + 1) *
           std::pow(1.0 - q, 2 * n - 2 * m - 3);
  }
  return (1.0 - q) * (1.0 - q) * even + q * q * odd;
}

double fidelity_gate_oracle(double q, int n, Pauli direct_left, Pauli direct_right) {
  check_prob(q, "q");
  if (n < 2 || n > 8) throw std::domain_error("fidelity_gate_oracle: n outside [2, 8]");
  const int sites = 2 * n - 2;
  const unsigned long patterns = 1ul << sites;
  double survival = 0.0;
  for (unsigned long mask = 0; mask < patterns; ++mask) {
    const int k = __builtin_popcountl(mask);
    const double pk = std::pow(q, k) * std::pow(1.0 - q, sites - k);
    const bool odd = (k & 1) != 0;
    for (int el = 0; el < 2; ++el) {
      for (int er = 0; er < 2; ++er) {
        const double pd = (el ? q : 1.0 - q) * (er ? q : 1.0 - q);
        Pauli net = odd ? Pauli::Y : Pauli::I;
        if (el) net = pauli_mul(net, direct_left);
        if (er) net = pauli_mul(net, direct_right);
        if (net == Pauli::I) survival += pk * pd;
      }
    }
  }
  return survival;
}

SurveyResult pauli_pair_survey(double q, int n) {
  static constexpr Pauli kPaulis[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  SurveyResult res;
  res.min_fidelity = 2.0;
  for (Pauli l : kPaulis) {
    for (Pauli r : kPaulis) {
      const double f = fidelity_gate_oracle(q, n, l, r);
      res.pairs.push_back({{l, r}, f});
      res.min_fidelity = std::min(res.min_fidelity, f);
    }
  }
  std::vector<double> vals;
  for (const auto& pf : res.pairs) vals.push_back(pf.fidelity);
  std::sort(vals.begin(), vals.end());
  for (double v : vals) {
    if (res.distinct.empty() || v - res.distinct.back() > 1e-12) res.distinct.push_back(v);
  }
  if (q <= 0.5) {
    res.closed_form = fidelity_gate(q, static_cast<double>(n));
    if (std::abs(res.min_fidelity - res.closed_form) > 1e-9) {
      throw SolverError("pauli_pair_survey: minimum does not match the closed form");
    }
  } else {
    res.closed_form = res.min_fidelity;
  }
  return res;
}

double loss_fidelity_initial(const LossParams& lp) {
  check_prob(lp.p_loss, "p_loss");
  check_prob(lp.p_fault, "p_fault");
  return (1.0 - lp.p_loss) * (1.0 - lp.p_fault) * (1.0 - lp.p_fault) + lp.p_loss / 4.0;
}

double loss_fidelity_gate(const LossParams& lp, double n) {
  check_prob(lp.q_l, "q_l");
  check_prob(lp.q_f, "q_f");
  if (n < 1.0) throw std::domain_error("loss_fidelity_gate: n < 1");
  const double e = 2.0 * n - 1.0;
  return lp.q_l / 4.0 +
         0.5 * std::pow(1.0 - 2.0 * lp.q_f, e) * std::pow(1.0 - lp.q_l, e) +
         0.5 * (1.0 - lp.q_l) * (1.0 - 2.0 * lp.q_f + 2.0 * lp.q_f * lp.q_f);
}

}  // namespace puribound
