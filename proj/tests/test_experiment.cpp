// Copyright 2026 The repeaterlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "repeaterlab/experiment.hpp"

using namespace repeaterlab;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "repeaterlab_tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) {
      fields.push_back(field);
    }
    if (first) {
      t.header = fields;
      first = false;
    } else {
      t.rows.push_back(fields);
    }
  }
  return t;
}

int run(std::vector<std::string> args) { return run_experiment(args); }

}  // namespace

TEST_CASE("config round trip is lossless") {
  ExperimentConfig c;
  c.subcommand = "fixpoints";
  c.scheme = Scheme::A;
  c.noise = NoiseParams{0.9871234567890123, 0.95, 1.0 / 3.0};
  c.eta_tied = true;
  c.segments = 81;
  c.group = 3;
  c.working_fidelity = 0.9603;
  c.eps = 0.125;
  c.elementary = "steady";
  c.timing.tau_op = 1.7e-5;
  c.timing.tau_class = 10.0 / 3e5;
  c.timing.l_segment = 12.5;
  c.timing.l0 = 9.75;
  c.timing.c = 2.99e5;
  c.runs = 123;
  c.seed = 9876543210123456789ull;
  c.scan_lo = 0.9500000000000001;
  c.scan_hi = 0.99;
  c.steps = 17;
  c.f0 = 0.71;
  c.out = "some dir/result.csv";

  const ExperimentConfig d = parse_config_text(serialize_config(c));
  CHECK(d.subcommand == c.subcommand);
  CHECK(d.scheme == c.scheme);
  CHECK(d.noise.p1 == c.noise.p1);
  CHECK(d.noise.p2 == c.noise.p2);
  CHECK(d.noise.eta == c.noise.eta);
  CHECK(d.eta_tied == c.eta_tied);
  CHECK(d.segments == c.segments);
  CHECK(d.group == c.group);
  CHECK(d.working_fidelity == c.working_fidelity);
  CHECK(d.eps == c.eps);
  CHECK(d.elementary == c.elementary);
  CHECK(d.timing.tau_op == c.timing.tau_op);
  CHECK(d.timing.tau_class == c.timing.tau_class);
  CHECK(d.timing.l_segment == c.timing.l_segment);
  CHECK(d.timing.l0 == c.timing.l0);
  CHECK(d.timing.c == c.timing.c);
  CHECK(d.runs == c.runs);
  CHECK(d.seed == c.seed);
  CHECK(d.scan_lo == c.scan_lo);
  CHECK(d.scan_hi == c.scan_hi);
  CHECK(d.steps == c.steps);
  CHECK(d.f0 == c.f0);
  CHECK(d.out == c.out);

  CHECK(serialize_config(d) == serialize_config(c));
  CHECK_THROWS_AS(parse_config_text("nonsense=1\n"), std::invalid_argument);
}

TEST_CASE("fixpoints subcommand includes the breakdown point") {
  const fs::path out = temp_dir() / "fixpoints.csv";
  REQUIRE(run({"fixpoints", "--scheme", "A", "--p", "0.95..1.0", "--steps",
               "11", "--out", out.string()}) == 0);
  const CsvTable t = parse_csv(slurp(out));
  REQUIRE(t.header == std::vector<std::string>{"p", "f_min", "f_max"});
  bool found = false;
  for (const auto& row : t.rows) {
    const double p = std::stod(row[0]);
    if (std::abs(p - 0.9486832980505138) < 5e-5) {
      found = true;
      CHECK(std::stod(row[1]) == Catch::Approx(0.75).margin(1e-9));
      CHECK(std::stod(row[2]) == Catch::Approx(0.75).margin(1e-9));
    }
  }
  CHECK(found);
  CHECK(fs::exists(out.string() + ".meta"));
}

TEST_CASE("replay reproduces a run bit-identically") {
  const fs::path dir = temp_dir();
  const fs::path out = dir / "repeater_c.csv";
  REQUIRE(run({"repeater", "--scheme", "C", "--segments", "16",
               "--working-fidelity", "0.95", "--errors", "0.005", "--runs",
               "25", "--seed", "42", "--out", out.string()}) == 0);
  const std::string original = slurp(out);

  const fs::path replayed = dir / "repeater_c_replayed.csv";
  REQUIRE(run({"replay", "--config", out.string() + ".meta", "--out",
               replayed.string()}) == 0);
  CHECK(slurp(replayed) == original);
}

TEST_CASE("converge output shows scheme B winning the race") {
  const fs::path out = temp_dir() / "converge.csv";
  REQUIRE(run({"converge", "--f0", "0.7", "--errors", "0.01", "--steps", "25",
               "--out", out.string()}) == 0);
  const CsvTable t = parse_csv(slurp(out));
  int first_a = -1;
  int first_b = -1;
  for (const auto& row : t.rows) {
    const int step = std::stoi(row[0]);
    if (first_a < 0 && std::stod(row[1]) >= 0.95) first_a = step;
    if (first_b < 0 && std::stod(row[2]) >= 0.95) first_b = step;
  }
  REQUIRE(first_b > 0);
  REQUIRE(first_a > 0);
  CHECK(first_b < first_a);
}

TEST_CASE("repeater degenerate chain and exit codes") {
  const fs::path dir = temp_dir();
  SECTION("single segment run reports unit resources") {
    const fs::path out = dir / "repeater_one.csv";
    REQUIRE(run({"repeater", "--scheme", "C", "--segments", "1", "--levels",
                 "0", "--out", out.string()}) == 0);
    const CsvTable t = parse_csv(slurp(out));
    CHECK(t.rows.empty());
  }
  SECTION("conflicting segment and level counts") {
    CHECK(run({"repeater", "--segments", "8", "--levels", "2"}) == 1);
  }
  SECTION("infeasible loop exits with 2") {
    const fs::path out = dir / "repeater_bad.csv";
    CHECK(run({"repeater", "--scheme", "A", "--segments", "4", "--p2", "0.95",
               "--working-fidelity", "0.9", "--out", out.string()}) == 2);
  }
  SECTION("unknown flag exits with 1") {
    CHECK(run({"repeater", "--frobnicate", "1"}) == 1);
  }
  SECTION("bad scheme exits with 1") {
    CHECK(run({"repeater", "--scheme", "Q"}) == 1);
  }
}

TEST_CASE("environment seed override") {
  const fs::path dir = temp_dir();
  const fs::path out1 = dir / "env1.csv";
  const fs::path out2 = dir / "env2.csv";
  setenv("REPEATERLAB_SEED", "777", 1);
  REQUIRE(run({"repeater", "--scheme", "C", "--segments", "16", "--errors",
               "0.005", "--working-fidelity", "0.95", "--runs", "10", "--seed",
               "1", "--out", out1.string()}) == 0);
  unsetenv("REPEATERLAB_SEED");
  REQUIRE(run({"repeater", "--scheme", "C", "--segments", "16", "--errors",
               "0.005", "--working-fidelity", "0.95", "--runs", "10", "--seed",
               "777", "--out", out2.string()}) == 0);
  const std::string meta1 = slurp(fs::path(out1.string() + ".meta"));
  const std::string meta2 = slurp(fs::path(out2.string() + ".meta"));
  CHECK(meta1.find("seed=777\n") != std::string::npos);
  CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("shape and loop scans produce plausible data") {
  const fs::path dir = temp_dir();
  SECTION("shape scan rises towards the binary state") {
    const fs::path out = dir / "shape.csv";
    REQUIRE(run({"shape", "--f0", "0.7", "--errors", "0.01", "--eps", "0..1",
                 "--steps", "5", "--out", out.string()}) == 0);
    const CsvTable t = parse_csv(slurp(out));
    REQUIRE(t.rows.size() == 5);
    CHECK(std::stod(t.rows.back()[1]) > std::stod(t.rows.front()[1]));
  }
  SECTION("loop scan marks the feasible region") {
    const fs::path out = dir / "loop.csv";
    REQUIRE(run({"loop", "--scheme", "A", "--group", "3", "--p2", "0.97",
                 "--f", "0.6..0.95", "--steps", "8", "--out", out.string()}) ==
            0);
    const CsvTable t = parse_csv(slurp(out));
    bool any_feasible = false;
    for (const auto& row : t.rows) {
      any_feasible = any_feasible || row[4] == "1";
    }
    CHECK(any_feasible);
  }
  SECTION("resources scan emits per-loop cost") {
    const fs::path out = dir / "resources.csv";
    REQUIRE(run({"resources", "--scheme", "B", "--errors", "0.005", "--f",
                 "0.93..0.97", "--steps", "5", "--out", out.string()}) == 0);
    const CsvTable t = parse_csv(slurp(out));
    REQUIRE(!t.rows.empty());
    for (const auto& row : t.rows) {
      CHECK(std::stod(row[2]) >= 2.0);
    }
  }
  SECTION("resources scan omits infeasible working points") {
    const fs::path out = dir / "resources_none.csv";
    REQUIRE(run({"resources", "--scheme", "A", "--p2", "0.95", "--f",
                 "0.7..0.9", "--steps", "4", "--out", out.string()}) == 0);
    const CsvTable t = parse_csv(slurp(out));
    CHECK(t.rows.empty());
  }
}

TEST_CASE("table subcommand emits the comparison rows") {
  const fs::path out = temp_dir() / "table.csv";
  // Few Monte Carlo runs keep this quick; the resource columns are
  // deterministic and independent of the run count.
  REQUIRE(run({"table", "--errors", "0.005", "--working-fidelity", "0.96",
               "--runs", "10", "--seed", "5", "--out", out.string()}) == 0);
  const CsvTable t = parse_csv(slurp(out));
  REQUIRE(t.rows.size() == 6);
  double b_continental = 0.0;
  double c_intercontinental = 0.0;
  for (const auto& row : t.rows) {
    if (row[0] == "B" && row[1] == "continental") {
      b_continental = std::stod(row[3]);
    }
    if (row[0] == "C" && row[1] == "intercontinental") {
      c_intercontinental = std::stod(row[3]);
    }
  }
  CHECK(std::abs(b_continental - 329.0) / 329.0 < 0.15);
  CHECK(c_intercontinental == 11.0);
}
