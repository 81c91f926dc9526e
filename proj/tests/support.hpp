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

#ifndef REPEATERLAB_TESTS_SUPPORT_HPP
#define REPEATERLAB_TESTS_SUPPORT_HPP

#include <random>

#include "repeaterlab/bell_state.hpp"
#include "repeaterlab/noise.hpp"

namespace repeaterlab::testing {

/// Uniform random point on the weight simplex.
inline BellDiagonalState random_state(std::mt19937_64& rng) {
  std::exponential_distribution<double> exp_dist(1.0);
  double w[4];
  double sum = 0.0;
  for (double& x : w) {
    x = exp_dist(rng);
    sum += x;
  }
  return make_bell_diagonal(w[0] / sum, w[1] / sum, w[2] / sum, w[3] / sum);
}

inline NoiseParams random_noise(std::mt19937_64& rng, double lo = 0.9) {
  std::uniform_real_distribution<double> u(lo, 1.0);
  return NoiseParams{u(rng), u(rng), u(rng)};
}

}  // namespace repeaterlab::testing

#endif  // REPEATERLAB_TESTS_SUPPORT_HPP
