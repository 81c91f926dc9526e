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
#include <cmath>
#include <random>
#include <vector>

#include "repeaterlab/connection.hpp"
#include "repeaterlab/oracle.hpp"
#include "support.hpp"

using namespace repeaterlab;

TEST_CASE("connect_pair") {
  SECTION("perfect pairs stay perfect") {
    const auto out = connect_pair(make_werner(1.0), make_werner(1.0),
                                  NoiseParams::perfect());
    CHECK(out.a == Catch::Approx(1.0).margin(1e-15));
  }
  SECTION("Werner 0.96, perfect operations") {
    const auto out = connect_pair(make_werner(0.96), make_werner(0.96),
                                  NoiseParams::perfect());
    CHECK(out.a == Catch::Approx(0.9221333333333333).margin(1e-12));
  }
  SECTION("Werner 0.96, half-percent gate and measurement errors") {
    const NoiseParams noise{1.0, 0.995, 0.995};
    const auto out = connect_pair(make_werner(0.96), make_werner(0.96), noise);
    CHECK(out.a ==
          Catch::Approx(connect_chain_werner(0.96, 2, noise)).margin(1e-12));
  }
  SECTION("matches the oracle on random inputs") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 25; ++i) {
      const auto s = testing::random_state(rng);
      const auto t = testing::random_state(rng);
      const auto noise = testing::random_noise(rng);
      CHECK(max_component_distance(connect_pair(s, t, noise),
                                   oracle_connection(s, t, noise)) < 1e-12);
    }
  }
  SECTION("single swap reproduces the chain formula across the noise grid") {
    for (double f : {0.3, 0.6, 0.9}) {
      for (double p1 : {0.92, 1.0}) {
        for (double p2 : {0.9, 0.95, 1.0}) {
          for (double eta : {0.9, 0.95, 1.0}) {
            const NoiseParams nz{p1, p2, eta};
            const auto w = make_werner(f);
            const double expected = connect_chain_werner(f, 2, nz);
            CHECK(twirl(connect_pair(w, w, nz)).fidelity() ==
                  Catch::Approx(expected).margin(1e-10));
            CHECK(twirl(oracle_connection(w, w, nz)).fidelity() ==
                  Catch::Approx(expected).margin(1e-10));
          }
        }
      }
    }
  }
}

TEST_CASE("connect_chain_werner") {
  CHECK(connect_chain_werner(0.77, 1, NoiseParams::perfect()) ==
        Catch::Approx(0.77).margin(1e-15));
  CHECK(connect_chain_werner(1.0, 5, NoiseParams::perfect()) ==
        Catch::Approx(1.0).margin(1e-15));
  CHECK(connect_chain_werner(0.9, 3, NoiseParams{1.0, 0.97, 1.0}) ==
        Catch::Approx(0.709368).margin(1e-6));
  CHECK_THROWS_AS(connect_chain_werner(0.9, 0, NoiseParams::perfect()),
                  std::domain_error);
}

TEST_CASE("connect_chain") {
  const NoiseParams noise{0.99, 0.995, 0.995};

  SECTION("single pair passes through untouched") {
    const std::vector<BellDiagonalState> one{make_werner(0.9)};
    for (auto strategy :
         {ConnectionStrategy::sequential, ConnectionStrategy::parallel}) {
      const auto r = connect_chain(one, strategy, noise);
      CHECK(r.rounds == 0);
      CHECK(max_component_distance(r.state, one[0]) == 0.0);
    }
  }
  SECTION("round counts") {
    const std::vector<BellDiagonalState> four(4, make_werner(0.95));
    const auto seq = connect_chain(four, ConnectionStrategy::sequential, noise);
    const auto par = connect_chain(four, ConnectionStrategy::parallel, noise);
    CHECK(seq.rounds == 3);
    CHECK(par.rounds == 2);
    CHECK(max_component_distance(seq.state, par.state) < 1e-12);
  }
  SECTION("parallel rounds stay logarithmic for odd chain lengths") {
    for (int n : {3, 5, 6, 7, 9, 13}) {
      const std::vector<BellDiagonalState> chain(n, make_werner(0.9));
      const auto r = connect_chain(chain, ConnectionStrategy::parallel, noise);
      CHECK(r.rounds == static_cast<int>(std::ceil(std::log2(n))));
    }
  }
  SECTION("strategies agree on random heterogeneous chains") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> len(2, 9);
    for (int i = 0; i < 20; ++i) {
      std::vector<BellDiagonalState> chain;
      const int n = len(rng);
      for (int j = 0; j < n; ++j) {
        chain.push_back(testing::random_state(rng));
      }
      const auto nz = testing::random_noise(rng);
      const auto seq = connect_chain(chain, ConnectionStrategy::sequential, nz);
      const auto par = connect_chain(chain, ConnectionStrategy::parallel, nz);
      CHECK(max_component_distance(seq.state, par.state) < 1e-12);
    }
  }
  SECTION("Werner chains with re-twirled connections reproduce the closed form") {
    // The closed form is the recursion of twirled connections. Without the
    // intermediate twirls the measurement noise acts anisotropically on the
    // three non-target components and the fidelities drift apart for longer
    // chains, so the exact fold only matches when eta = 1.
    for (int n : {2, 4, 8, 11}) {
      BellDiagonalState acc = make_werner(0.93);
      for (int i = 1; i < n; ++i) {
        acc = twirl(connect_pair(acc, make_werner(0.93), noise));
      }
      CHECK(acc.fidelity() ==
            Catch::Approx(connect_chain_werner(0.93, n, noise)).margin(1e-10));
    }
  }
  SECTION("exact fold plus one final twirl matches at eta = 1") {
    const NoiseParams ideal_meas{0.99, 0.995, 1.0};
    for (int n : {2, 5, 8, 16}) {
      const std::vector<BellDiagonalState> chain(n, make_werner(0.93));
      const auto folded =
          connect_chain(chain, ConnectionStrategy::parallel, ideal_meas);
      CHECK(twirl(folded.state).fidelity() ==
            Catch::Approx(connect_chain_werner(0.93, n, ideal_meas))
                .margin(1e-10));
    }
  }
  SECTION("fidelity decays towards 1/4") {
    double previous = 1.0;
    for (int n : {2, 4, 8, 16, 32, 64}) {
      const double f = connect_chain_werner(0.9, n, noise);
      CHECK(f < previous);
      previous = f;
    }
    CHECK(connect_chain_werner(0.9, 4096, noise) ==
          Catch::Approx(0.25).margin(1e-6));
  }
  SECTION("empty chain is rejected") {
    CHECK_THROWS_AS(
        connect_chain({}, ConnectionStrategy::sequential, noise),
        std::domain_error);
  }
}
