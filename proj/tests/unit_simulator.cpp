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

#include "puribound/simulator.hpp"
#include "puribound/threshold.hpp"

using namespace puribound;

namespace {
const GateNoiseSpec kNoiseless{};
}

TEST_CASE("label parsing") {
  CHECK(parse_protocol("bbpssw") == Protocol::bbpssw);
  CHECK(parse_protocol("dejmps") == Protocol::dejmps);
  CHECK_THROWS_AS(parse_protocol("epl"), std::domain_error);
  CHECK(parse_noise_model("none") == GateNoiseSpec::Model::none);
  CHECK(parse_noise_model("depolarizing") == GateNoiseSpec::Model::depolarizing);
  CHECK(parse_noise_model("adversarial-xz") == GateNoiseSpec::Model::adversarial_xz);
  CHECK_THROWS_AS(parse_noise_model("amplitude-damping"), std::domain_error);
  CHECK_THROWS_AS(GateNoiseSpec(GateNoiseSpec::Model::depolarizing, 1.2), std::domain_error);
}

TEST_CASE("pure singlets pass through a noiseless round") {
  const BellDiagonal singlet(1.0, 0.0, 0.0, 0.0);
  for (Protocol proto : {Protocol::bbpssw, Protocol::dejmps}) {
    const auto r = purification_round(singlet, singlet, kNoiseless, proto);
    REQUIRE(r.state.has_value());
    CHECK(r.success_prob == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.state->fidelity() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("noiseless Werner round matches the closed recurrence") {
  const BellDiagonal in = BellDiagonal::werner(0.75);
  const auto exact = purification_round(in, in, kNoiseless, Protocol::bbpssw);
  REQUIRE(exact.state.has_value());
  CHECK(exact.success_prob == doctest::Approx(0.72222222222222).epsilon(1e-10));
  CHECK(exact.state->fidelity() == doctest::Approx(0.78846153846154).epsilon(1e-10));

  const auto rec = bbpssw_recurrence(0.75);
  REQUIRE(rec.state.has_value());
  CHECK(std::abs(exact.success_prob - rec.success_prob) <= 1e-10);
  CHECK(std::abs(exact.state->fidelity() - rec.state->fidelity()) <= 1e-10);
}

TEST_CASE("exact path agrees with the DEJMPS recurrence on a weight grid") {
  const BellDiagonal inputs[] = {
      BellDiagonal(0.6, 0.15, 0.15, 0.1),
      BellDiagonal(0.7, 0.2, 0.05, 0.05),
      BellDiagonal(0.55, 0.05, 0.3, 0.1),
      BellDiagonal::werner(0.9),
  };
  for (const auto& in : inputs) {
    const auto exact = purification_round(in, in, kNoiseless, Protocol::dejmps);
    const auto rec = dejmps_recurrence(in);
    REQUIRE(exact.state.has_value());
    REQUIRE(rec.state.has_value());
    CHECK(std::abs(exact.success_prob - rec.success_prob) <= 1e-10);
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(exact.state->weights()[static_cast<std::size_t>(i)] -
                     rec.state->weights()[static_cast<std::size_t>(i)]) <= 1e-10);
    }
  }
}

TEST_CASE("noiseless rounds purify Werner states above one half") {
  for (double f : {0.6, 0.75, 0.9}) {
    for (Protocol proto : {Protocol::bbpssw, Protocol::dejmps}) {
      const BellDiagonal in = BellDiagonal::werner(f);
      const auto r = purification_round(in, in, kNoiseless, proto);
      REQUIRE(r.state.has_value());
      CHECK(r.state->fidelity() > f);
      CHECK(r.success_prob > 0.0);
      CHECK(r.success_prob <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("round outputs are valid Bell-diagonal states under noise") {
  const BellDiagonal in = BellDiagonal::werner(0.8);
  for (auto model : {GateNoiseSpec::Model::depolarizing, GateNoiseSpec::Model::adversarial_xz}) {
    for (double q : {0.01, 0.05, 0.15}) {
      const GateNoiseSpec noise(model, q);
      const auto r = purification_round(in, in, noise, Protocol::dejmps);
      REQUIRE(r.state.has_value());
      double sum = 0.0;
      for (double w : r.state->weights()) {
        CHECK(w >= 0.0);
        sum += w;
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("measurement flips degrade the round") {
  const BellDiagonal in = BellDiagonal::werner(0.8);
  const GateNoiseSpec flipped(GateNoiseSpec::Model::none, 0.0, 0.05);
  const auto clean = purification_round(in, in, kNoiseless, Protocol::dejmps);
  const auto noisy = purification_round(in, in, flipped, Protocol::dejmps);
  REQUIRE(noisy.state.has_value());
  CHECK(noisy.state->fidelity() < clean.state->fidelity());
}

TEST_CASE("noiseless recursion converges up to a near-perfect pair") {
  for (Protocol proto : {Protocol::bbpssw, Protocol::dejmps}) {
    const auto trace = recurse_to_fixed_point(0.75, kNoiseless, proto);
    CHECK(trace.verdict == Verdict::converged_up);
    CHECK(trace.final_fidelity >= 0.999);
    for (const auto& [f, ps] : trace.rounds) {
      CHECK(f >= 0.0);
      CHECK(f <= 1.0);
      CHECK(ps > 0.0);
      CHECK(ps <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("separable input has nothing to purify") {
  const auto trace = recurse_to_fixed_point(0.5, kNoiseless, Protocol::dejmps);
  CHECK(trace.verdict != Verdict::converged_up);
}

TEST_CASE("strong depolarizing noise destroys the recursion") {
  const GateNoiseSpec noise(GateNoiseSpec::Model::depolarizing, 0.2);
  const auto trace = recurse_to_fixed_point(0.9, noise, Protocol::dejmps);
  CHECK(trace.verdict == Verdict::converged_down);
}

TEST_CASE("recursion input validation") {
  CHECK_THROWS_AS(recurse_to_fixed_point(0.1, kNoiseless, Protocol::dejmps),
                  std::domain_error);
  CHECK_THROWS_AS(recurse_to_fixed_point(0.75, kNoiseless, Protocol::dejmps, 500),
                  std::domain_error);
}

TEST_CASE("depolarizing threshold sits in the reported band") {
  const auto qc =
      protocol_threshold(GateNoiseSpec::Model::depolarizing, Protocol::dejmps, 0.85);
  REQUIRE(qc.has_value());
  CHECK(*qc >= 0.02);
  CHECK(*qc <= 0.06);
  CHECK(*qc == doctest::Approx(0.0326).epsilon(0.02));
}

TEST_CASE("adversarial threshold respects the closed-form bound") {
  const auto qc =
      protocol_threshold(GateNoiseSpec::Model::adversarial_xz, Protocol::dejmps, 0.85);
  REQUIRE(qc.has_value());
  CHECK(*qc <= 0.0535);
  CHECK(*qc <= max_apex().q + 5e-4);
}

TEST_CASE("noiseless model has no threshold transition") {
  const auto qc = protocol_threshold(GateNoiseSpec::Model::none, Protocol::dejmps, 0.85);
  CHECK_FALSE(qc.has_value());
  CHECK_THROWS_AS(protocol_threshold(GateNoiseSpec::Model::none, Protocol::dejmps, 0.5),
                  std::domain_error);
}
