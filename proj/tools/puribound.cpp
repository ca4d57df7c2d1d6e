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

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "puribound/adversarial.hpp"
#include "puribound/simulator.hpp"
#include "puribound/threshold.hpp"

namespace {

using puribound::BellDiagonal;

// Exit codes: 0 success, 2 numerical failure, 3 I/O failure, 4 bad arguments.
constexpr int kExitSolver = 2;
constexpr int kExitIo = 3;
constexpr int kExitArgs = 4;

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> cells) { rows.push_back(std::move(cells)); }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) os << ',';
    os << t.columns[c];
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      if (const double* d = std::get_if<double>(&row[c])) {
        os << fmt(*d);
      } else {
        os << std::get<std::string>(row[c]);
      }
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json rec;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (const double* d = std::get_if<double>(&row[c])) {
        rec[t.columns[c]] = *d;
      } else {
        rec[t.columns[c]] = std::get<std::string>(row[c]);
      }
    }
    arr.push_back(std::move(rec));
  }
  os << arr.dump(2) << '\n';
}

struct Output {
  std::string path;  // empty: stdout
  std::string format = "csv";

  int emit(const Table& t) const {
    const auto write = [&](std::ostream& os) {
      if (format == "json") {
        write_json(os, t);
      } else {
        write_csv(os, t);
      }
    };
    if (path.empty()) {
      write(std::cout);
      return 0;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
      std::cerr << "error: cannot open output path '" << path << "'\n";
      return kExitIo;
    }
    write(os);
    if (!os.good()) {
      std::cerr << "error: write failed for '" << path << "'\n";
      return kExitIo;
    }
    return 0;
  }
};

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> v;
  if (steps == 1) {
    v.push_back(lo);
    return v;
  }
  for (int i = 0; i < steps; ++i) {
    v.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1));
  }
  return v;
}

const char* pauli_name(puribound::Pauli p) {
  switch (p) {
    case puribound::Pauli::I: return "I";
    case puribound::Pauli::X: return "X";
    case puribound::Pauli::Y: return "Y";
    case puribound::Pauli::Z: return "Z";
  }
  return "?";
}

const char* verdict_name(puribound::Verdict v) {
  switch (v) {
    case puribound::Verdict::converged_up: return "converged-up";
    case puribound::Verdict::converged_down: return "converged-down";
    case puribound::Verdict::stationary: return "stationary";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "puribound: upper bounds on fault-tolerant purification thresholds\n"
      "under adversarial local gate noise, with exact-protocol cross-checks."};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "csv";
  double tol = 1e-10;
  int threads = 1;
  app.add_option("--out", out_path, "Output file path (default: stdout)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", tol, "Solver tolerance")->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "Worker threads for grid evaluation");
  app.fallthrough();

  std::function<Table()> run;

  auto* cmd_max = app.add_subcommand(
      "max",
      "Maximize the apex gate-error rate over the copy count.\n"
      "Columns: n, p, q, f_star, residual_max");
  cmd_max->callback([&] {
    run = [&] {
      const auto a = puribound::max_apex(tol);
      Table t;
      t.columns = {"n", "p", "q", "f_star", "residual_max"};
      t.add_row({a.n, a.p, a.q, a.f_star, a.residual_max()});
      return t;
    };
  });

  auto* cmd_scan = app.add_subcommand(
      "apex-scan",
      "Apex solution on an inclusive grid of copy counts.\n"
      "Columns: n, p, q, f_star, residual_max");
  double scan_min = 1.5, scan_max = 6.0, scan_step = 0.01;
  cmd_scan->add_option("--n-min", scan_min, "Grid start (must exceed 1)");
  cmd_scan->add_option("--n-max", scan_max, "Grid end");
  cmd_scan->add_option("--step", scan_step, "Grid step");
  cmd_scan->callback([&] {
    run = [&] {
      if (scan_max < scan_min) {
        throw puribound::SolverError("apex-scan: empty range");
      }
      Table t;
      t.columns = {"n", "p", "q", "f_star", "residual_max"};
      for (const auto& a : puribound::apex_scan(scan_min, scan_max, scan_step)) {
        t.add_row({a.n, a.p, a.q, a.f_star, a.residual_max()});
      }
      return t;
    };
  });

  auto* cmd_region = app.add_subcommand(
      "region",
      "Purifiable-region boundary for a fixed copy count; the below-apex\n"
      "branch is exact, the above-apex branch uses the documented\n"
      "adversarial-concentration model.\n"
      "Columns: p (preparation error), q (gate error), branch");
  double region_n = 2.0;
  int region_points = 50;
  std::string region_model = "adversarial-concentration";
  std::string region_branch = "both";
  cmd_region->add_option("--n", region_n, "Copy count (> 1)");
  cmd_region->add_option("--points", region_points, "Samples per branch")
      ->check(CLI::Range(2, 100000));
  cmd_region->add_option("--model", region_model, "Above-apex model label");
  cmd_region->add_option("--branch", region_branch, "Branch selection")
      ->check(CLI::IsMember({"below", "above", "both"}));
  cmd_region->callback([&] {
    run = [&] {
      const auto a = puribound::apex(region_n);
      Table t;
      t.columns = {"p", "q", "branch"};
      if (region_branch != "above") {
        const auto below =
            puribound::region_boundary(region_n, linspace(0.0, a.p, region_points));
        for (const auto& [p, q] : below.points) {
          t.add_row({p, q, std::string("below-apex")});
        }
      }
      if (region_branch != "below") {
        const auto above = puribound::region_boundary_above(
            region_n, linspace(a.p, puribound::ancilla_limit(), region_points),
            region_model);
        for (const auto& [p, q] : above.points) {
          t.add_row({p, q, std::string("above-apex-model")});
        }
      }
      return t;
    };
  });

  auto* cmd_loss = app.add_subcommand(
      "loss",
      "Trade-off between gate faults and tolerable loss, maximizing the\n"
      "apex feasibility over the copy count.\n"
      "Columns: q_f (gate fault rate), q_l_max (largest tolerable loss),\n"
      "n_star (maximizing copy count)");
  double loss_qf_min = 0.0, loss_qf_max = 0.052, loss_n_max = 10.0;
  int loss_steps = 27;
  cmd_loss->add_option("--qf-min", loss_qf_min, "Gate fault grid start");
  cmd_loss->add_option("--qf-max", loss_qf_max, "Gate fault grid end");
  cmd_loss->add_option("--steps", loss_steps, "Grid points")
      ->check(CLI::Range(1, 100000));
  cmd_loss->add_option("--n-max", loss_n_max, "Upper end of the copy-count search");
  cmd_loss->callback([&] {
    run = [&] {
      Table t;
      t.columns = {"q_f", "q_l_max", "n_star"};
      const auto pts = puribound::loss_tradeoff(
          linspace(loss_qf_min, loss_qf_max, loss_steps), loss_n_max);
      for (const auto& pt : pts) {
        t.add_row({pt.q_f, pt.q_l_max, pt.n_star});
      }
      return t;
    };
  });

  auto* cmd_adv = app.add_subcommand(
      "adversarial",
      "Grid search for the most destructive one-sided unitary on a Werner\n"
      "state; emits the full entanglement landscape and reports the\n"
      "minimizer on stderr.\n"
      "Columns: theta, polar, azimuth (radians), eof (ebits)");
  double adv_f = 0.9, adv_p = 0.1;
  int adv_theta_steps = 64, adv_axis_steps = 64;
  cmd_adv->add_option("--f", adv_f, "Werner fidelity (> 1/2)");
  cmd_adv->add_option("--p", adv_p, "Unitary noise probability");
  cmd_adv->add_option("--theta-steps", adv_theta_steps, "Rotation-angle grid size");
  cmd_adv->add_option("--axis-steps", adv_axis_steps, "Axis grid size per angle");
  cmd_adv->callback([&] {
    run = [&] {
      Table t;
      t.columns = {"theta", "polar", "azimuth", "eof"};
      const auto res = puribound::worst_unitary_search(
          BellDiagonal::werner(adv_f), adv_p, adv_theta_steps, adv_axis_steps,
          threads, [&](double theta, double polar, double azimuth, double e) {
            t.add_row({theta, polar, azimuth, e});
          });
      std::cerr << "minimizer: theta=" << fmt(res.u.theta) << " axis=("
                << fmt(res.u.axis[0]) << "," << fmt(res.u.axis[1]) << ","
                << fmt(res.u.axis[2]) << ") eof=" << fmt(res.eof_min)
                << " pauli_eof_min=" << fmt(res.pauli_eof_min) << '\n';
      return t;
    };
  });

  auto* cmd_sim = app.add_subcommand(
      "simulate",
      "Exact recursive purification under noisy gates.\n"
      "Mode threshold (default) columns: noise, protocol, f0, q_crit\n"
      "(q_crit empty when no transition exists in [0, 0.2]).\n"
      "Mode sweep columns: q, verdict, rounds, final_f");
  std::string sim_noise = "adversarial-xz";
  std::string sim_protocol = "dejmps";
  std::string sim_mode = "threshold";
  double sim_f0 = 0.85, sim_q_min = 0.0, sim_q_max = 0.1;
  int sim_steps = 11;
  cmd_sim->add_option("--noise", sim_noise, "Noise model")
      ->check(CLI::IsMember({"none", "depolarizing", "adversarial-xz"}));
  cmd_sim->add_option("--protocol", sim_protocol, "Purification protocol")
      ->check(CLI::IsMember({"bbpssw", "dejmps"}));
  cmd_sim->add_option("--mode", sim_mode, "Output mode")
      ->check(CLI::IsMember({"threshold", "sweep"}));
  cmd_sim->add_option("--f0", sim_f0, "Initial Werner fidelity");
  cmd_sim->add_option("--q-min", sim_q_min, "Sweep start (mode sweep)");
  cmd_sim->add_option("--q-max", sim_q_max, "Sweep end (mode sweep)");
  cmd_sim->add_option("--steps", sim_steps, "Sweep points (mode sweep)")
      ->check(CLI::Range(1, 100000));
  cmd_sim->callback([&] {
    run = [&] {
      const auto model = puribound::parse_noise_model(sim_noise);
      const auto protocol = puribound::parse_protocol(sim_protocol);
      Table t;
      if (sim_mode == "threshold") {
        t.columns = {"noise", "protocol", "f0", "q_crit"};
        const auto qc = puribound::protocol_threshold(model, protocol, sim_f0);
        if (qc) {
          t.add_row({sim_noise, sim_protocol, sim_f0, *qc});
        } else {
          std::cerr << "note: no converged-up/down transition in q ∈ [0, 0.2]\n";
          t.add_row({sim_noise, sim_protocol, sim_f0, std::string("")});
        }
      } else {
        t.columns = {"q", "verdict", "rounds", "final_f"};
        for (double q : linspace(sim_q_min, sim_q_max, sim_steps)) {
          const puribound::GateNoiseSpec noise(model, q);
          const auto trace = puribound::recurse_to_fixed_point(sim_f0, noise, protocol);
          t.add_row({q, std::string(verdict_name(trace.verdict)),
                     static_cast<double>(trace.rounds.size()), trace.final_fidelity});
        }
      }
      return t;
    };
  });

  auto* cmd_survey = app.add_subcommand(
      "survey",
      "Exhaustive-enumeration fidelity for each of the 9 direct-error Pauli\n"
      "pairs on the surviving qubits.\n"
      "Columns: left, right (Pauli labels), fidelity");
  double survey_q = 0.1;
  int survey_n = 2;
  cmd_survey->add_option("--q", survey_q, "Per-qubit error probability");
  cmd_survey->add_option("--n", survey_n, "Copy count")->check(CLI::Range(2, 8));
  cmd_survey->callback([&] {
    run = [&] {
      const auto res = puribound::pauli_pair_survey(survey_q, survey_n);
      Table t;
      t.columns = {"left", "right", "fidelity"};
      for (const auto& pf : res.pairs) {
        t.add_row({std::string(pauli_name(pf.pair.left)),
                   std::string(pauli_name(pf.pair.right)), pf.fidelity});
      }
      std::cerr << "distinct fidelities: " << res.distinct.size()
                << ", min=" << fmt(res.min_fidelity)
                << ", closed_form=" << fmt(res.closed_form) << '\n';
      return t;
    };
  });

  auto* cmd_limit = app.add_subcommand(
      "ancilla-limit",
      "Preparation-noise level beyond which even perfect gates cannot\n"
      "purify.\nColumns: p_limit, fidelity_at_limit");
  cmd_limit->callback([&] {
    run = [&] {
      const double p = puribound::ancilla_limit();
      Table t;
      t.columns = {"p_limit", "fidelity_at_limit"};
      t.add_row({p, puribound::fidelity_initial(p)});
      return t;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitArgs;
  }

  try {
    const Table t = run();
    Output out{out_path, format};
    return out.emit(t);
  } catch (const puribound::SolverError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitArgs;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O failure: " << e.what() << '\n';
    return kExitIo;
  }
}
