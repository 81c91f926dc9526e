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

#include "repeaterlab/bell_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace repeaterlab {

namespace {

constexpr double kNegativeTolerance = 1e-12;
constexpr double kTraceTolerance = 1e-9;

double clamp_weight(double x) {
  if (x >= 0.0) {
    return x;
  }
  if (x >= -kNegativeTolerance) {
    return 0.0;
  }
  throw std::domain_error("Bell-diagonal weight is negative beyond tolerance");
}

}  // namespace

BellDiagonalState make_bell_diagonal(double a, double b, double c, double d) {
  a = clamp_weight(a);
  b = clamp_weight(b);
  c = clamp_weight(c);
  d = clamp_weight(d);
  const double sum = a + b + c + d;
  if (std::abs(sum - 1.0) > kTraceTolerance) {
    // The analytic maps are trace preserving; drift beyond rounding noise
    // signals a bug upstream.
    throw std::runtime_error("Bell-diagonal weights lost normalization");
  }
  return BellDiagonalState{a / sum, b / sum, c / sum, d / sum};
}

BellDiagonalState make_werner(double fidelity) {
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
    throw std::domain_error("Werner fidelity must lie in [0, 1]");
  }
  const double rest = (1.0 - fidelity) / 3.0;
  return BellDiagonalState{fidelity, rest, rest, rest};
}

BellDiagonalState twirl(const BellDiagonalState& s) {
  return make_werner(s.a);
}

BellDiagonalState epsilon_state(double f0, double eps) {
  if (!(f0 >= 0.0 && f0 <= 1.0)) {
    throw std::domain_error("epsilon_state fidelity must lie in [0, 1]");
  }
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw std::domain_error("epsilon_state shape parameter must lie in [0, 1]");
  }
  const double rest = 1.0 - f0;
  const double bc = rest * (1.0 - eps) / 2.0;
  return BellDiagonalState{f0, bc, bc, rest * eps};
}

double max_component_distance(const BellDiagonalState& x,
                              const BellDiagonalState& y) {
  return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b),
                   std::abs(x.c - y.c), std::abs(x.d - y.d)});
}

}  // namespace repeaterlab
