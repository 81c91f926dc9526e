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

#include "repeaterlab/bell_state.hpp"
#include "support.hpp"

using namespace repeaterlab;

TEST_CASE("make_werner") {
  SECTION("pure pair") {
    const auto s = make_werner(1.0);
    CHECK(s.a == 1.0);
    CHECK(s.b == 0.0);
    CHECK(s.c == 0.0);
    CHECK(s.d == 0.0);
  }
  SECTION("fully mixed") {
    const auto s = make_werner(0.25);
    CHECK(s.a == 0.25);
    CHECK(s.b == 0.25);
    CHECK(s.c == 0.25);
    CHECK(s.d == 0.25);
  }
  SECTION("generic fidelity") {
    const auto s = make_werner(0.7);
    CHECK(s.a == Catch::Approx(0.7));
    CHECK(s.b == Catch::Approx(0.1));
    CHECK(s.c == Catch::Approx(0.1));
    CHECK(s.d == Catch::Approx(0.1));
  }
  SECTION("domain errors") {
    CHECK_THROWS_AS(make_werner(-0.01), std::domain_error);
    CHECK_THROWS_AS(make_werner(1.01), std::domain_error);
  }
}

TEST_CASE("twirl") {
  SECTION("flattens shape, keeps fidelity") {
    const auto s = twirl(make_bell_diagonal(0.8, 0.1, 0.06, 0.04));
    CHECK(s.a == Catch::Approx(0.8));
    CHECK(s.b == Catch::Approx(0.2 / 3.0));
    CHECK(s.c == Catch::Approx(0.2 / 3.0));
    CHECK(s.d == Catch::Approx(0.2 / 3.0));
  }
  SECTION("pure state unchanged") {
    const auto s = twirl(make_bell_diagonal(1.0, 0.0, 0.0, 0.0));
    CHECK(s.a == 1.0);
    CHECK(s.d == 0.0);
  }
  SECTION("idempotent and fidelity preserving on random states") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
      const auto s = testing::random_state(rng);
      const auto t = twirl(s);
      CHECK(t.fidelity() == s.fidelity());
      CHECK(max_component_distance(twirl(t), t) == 0.0);
    }
  }
}

TEST_CASE("epsilon_state") {
  SECTION("one third is Werner") {
    const auto e = epsilon_state(0.7, 1.0 / 3.0);
    const auto w = make_werner(0.7);
    CHECK(max_component_distance(e, w) < 1e-15);
  }
  SECTION("binary shape at eps=1") {
    const auto e = epsilon_state(0.7, 1.0);
    CHECK(e.a == Catch::Approx(0.7));
    CHECK(e.b == 0.0);
    CHECK(e.c == 0.0);
    CHECK(e.d == Catch::Approx(0.3));
  }
  SECTION("no weight to distribute") {
    const auto e = epsilon_state(1.0, 0.5);
    CHECK(e.a == 1.0);
    CHECK(e.d == 0.0);
  }
  SECTION("domain errors") {
    CHECK_THROWS_AS(epsilon_state(1.2, 0.5), std::domain_error);
    CHECK_THROWS_AS(epsilon_state(0.5, -0.1), std::domain_error);
    CHECK_THROWS_AS(epsilon_state(0.5, 1.1), std::domain_error);
  }
}

TEST_CASE("weight validation") {
  SECTION("rounding noise is clamped") {
    const auto s = make_bell_diagonal(1.0, -1e-13, 0.0, 1e-13);
    CHECK(s.b == 0.0);
    CHECK(s.a <= 1.0);
  }
  SECTION("genuinely negative weight throws") {
    CHECK_THROWS_AS(make_bell_diagonal(1.0, -1e-10, 0.0, 0.0),
                    std::domain_error);
  }
  SECTION("trace drift beyond tolerance throws") {
    CHECK_THROWS_AS(make_bell_diagonal(0.5, 0.2, 0.2, 0.2),
                    std::runtime_error);
  }
  SECTION("small drift renormalizes") {
    const auto s = make_bell_diagonal(0.7 + 5e-10, 0.1, 0.1, 0.1);
    CHECK(s.a + s.b + s.c + s.d == Catch::Approx(1.0).margin(1e-15));
  }
}
