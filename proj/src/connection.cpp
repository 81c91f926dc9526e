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

#include "repeaterlab/connection.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace repeaterlab {

BellDiagonalState connect_pair(const BellDiagonalState& s1,
                               const BellDiagonalState& s2,
                               const NoiseParams& noise) {
  noise.validate();
  const double eta = noise.eta;
  const double flip[2] = {eta, 1.0 - eta};
  const double keep = noise.p1 * noise.p2;
  const double mixed = (1.0 - keep) / 4.0;

  double out[2][2];
  for (int phase = 0; phase < 2; ++phase) {
    for (int amp = 0; amp < 2; ++amp) {
      double ideal = 0.0;
      for (int p = 0; p < 2; ++p) {
        for (int a = 0; a < 2; ++a) {
          for (int q = 0; q < 2; ++q) {
            for (int b = 0; b < 2; ++b) {
              ideal += s1.component(p, a) * s2.component(q, b) *
                       flip[phase ^ p ^ q] * flip[amp ^ a ^ b];
            }
          }
        }
      }
      out[phase][amp] = keep * ideal + mixed;
    }
  }
  return make_bell_diagonal(out[0][0], out[1][1], out[0][1], out[1][0]);
}

double connect_chain_werner(double fidelity, int n_pairs,
                            const NoiseParams& noise) {
  noise.validate();
  if (n_pairs < 1) {
    throw std::domain_error("chain needs at least one pair");
  }
  const double gate = noise.p1 * noise.p2 *
                      (4.0 * noise.eta * noise.eta - 1.0) / 3.0;
  const double state = (4.0 * fidelity - 1.0) / 3.0;
  return 0.25 * (1.0 + 3.0 * std::pow(gate, n_pairs - 1) *
                            std::pow(state, n_pairs));
}

ChainResult connect_chain(std::span<const BellDiagonalState> states,
                          ConnectionStrategy strategy,
                          const NoiseParams& noise) {
  if (states.empty()) {
    throw std::domain_error("chain must not be empty");
  }
  if (strategy == ConnectionStrategy::sequential) {
    BellDiagonalState acc = states[0];
    for (std::size_t i = 1; i < states.size(); ++i) {
      acc = connect_pair(acc, states[i], noise);
    }
    return ChainResult{acc, static_cast<int>(states.size()) - 1};
  }
  std::vector<BellDiagonalState> level(states.begin(), states.end());
  int rounds = 0;
  while (level.size() > 1) {
    std::vector<BellDiagonalState> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      next.push_back(connect_pair(level[i], level[i + 1], noise));
    }
    if (level.size() % 2 == 1) {
      next.push_back(level.back());
    }
    level = std::move(next);
    ++rounds;
  }
  return ChainResult{level[0], rounds};
}

}  // namespace repeaterlab
