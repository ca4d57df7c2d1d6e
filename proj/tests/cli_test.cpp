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

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef PURIBOUND_CLI_PATH
#error "PURIBOUND_CLI_PATH must point at the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
  if (const char* env = std::getenv("PURIBOUND_CLI")) return env;
  return PURIBOUND_CLI_PATH;
}

int run(const std::string& args) {
  const std::string cmd = "'" + cli_path() + "' " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("puribound_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("exit code matrix") {
  CHECK(run("max") == 0);
  CHECK(run("ancilla-limit") == 0);
  CHECK(run("--help") == 0);
  // Numerical failure: empty scan range.
  CHECK(run("apex-scan --n-min 5 --n-max 2") == 2);
  // I/O failure: unwritable output path.
  CHECK(run("max --out /nonexistent_dir/out.csv") == 3);
  // Argument validation failures.
  CHECK(run("max --format yaml") == 4);
  CHECK(run("frobnicate") == 4);
  CHECK(run("region --n 0.5") == 4);
  CHECK(run("simulate --noise amplitude-damping") == 4);
  CHECK(run("survey --n 12") == 4);
  CHECK(run("adversarial --f 0.3") == 4);
  CHECK(run("apex-scan --n-min 0.5 --n-max 2") == 4);
}

TEST_CASE("reruns are byte-identical") {
  TempDir tmp;
  const fs::path a = tmp.path / "a.csv";
  const fs::path b = tmp.path / "b.csv";
  const std::string flags = "apex-scan --n-min 1.5 --n-max 3 --step 0.1 --out ";
  REQUIRE(run(flags + "'" + a.string() + "'") == 0);
  REQUIRE(run(flags + "'" + b.string() + "'") == 0);
  const std::string ca = slurp(a);
  CHECK(ca == slurp(b));
  CHECK(ca.rfind("n,p,q,f_star,residual_max\n", 0) == 0);
  CHECK(ca.find("\r") == std::string::npos);

  const fs::path ja = tmp.path / "a.json";
  const fs::path jb = tmp.path / "b.json";
  const std::string jflags = "loss --steps 3 --qf-max 0.04 --format json --out ";
  REQUIRE(run(jflags + "'" + ja.string() + "'") == 0);
  REQUIRE(run(jflags + "'" + jb.string() + "'") == 0);
  CHECK(slurp(ja) == slurp(jb));
}

TEST_CASE("json rows mirror the csv columns") {
  TempDir tmp;
  const fs::path c = tmp.path / "scan.csv";
  const fs::path j = tmp.path / "scan.json";
  REQUIRE(run("apex-scan --n-min 2 --n-max 2.2 --step 0.1 --out '" + c.string() + "'") == 0);
  REQUIRE(run("apex-scan --n-min 2 --n-max 2.2 --step 0.1 --format json --out '" +
              j.string() + "'") == 0);

  const auto rows = nlohmann::json::parse(slurp(j));
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 3);
  for (const auto& rec : rows) {
    for (const char* key : {"n", "p", "q", "f_star", "residual_max"}) {
      CHECK(rec.contains(key));
    }
  }
  CHECK(rows[0]["n"].get<double>() == doctest::Approx(2.0));

  // CSV carries the same rows: header plus three lines.
  const std::string csv = slurp(c);
  int lines = 0;
  for (char ch : csv) {
    if (ch == '\n') ++lines;
  }
  CHECK(lines == 4);
}

TEST_CASE("simulate threshold row stays under the bound") {
  TempDir tmp;
  const fs::path j = tmp.path / "sim.json";
  REQUIRE(run("simulate --noise adversarial-xz --protocol dejmps --f0 0.85 "
              "--format json --out '" + j.string() + "'") == 0);
  const auto rows = nlohmann::json::parse(slurp(j));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["q_crit"].get<double>() <= 0.0535);
}

TEST_CASE("survey emits nine labeled rows") {
  TempDir tmp;
  const fs::path j = tmp.path / "survey.json";
  REQUIRE(run("survey --q 0.1 --n 2 --format json --out '" + j.string() + "'") == 0);
  const auto rows = nlohmann::json::parse(slurp(j));
  CHECK(rows.size() == 9);
  CHECK(rows[0]["left"] == "X");
  CHECK(rows[0]["right"] == "X");
  CHECK(rows[0]["fidelity"].is_number());
}
