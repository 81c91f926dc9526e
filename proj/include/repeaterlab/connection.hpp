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

#ifndef REPEATERLAB_CONNECTION_HPP
#define REPEATERLAB_CONNECTION_HPP

#include <span>

#include "repeaterlab/bell_state.hpp"
#include "repeaterlab/noise.hpp"

namespace repeaterlab {

/// Order in which a chain of pairs is folded. Both orders produce the same
/// final state; they differ only in the number of rounds (N-1 sequentially,
/// ceil(log2 N) in parallel).
enum class ConnectionStrategy { sequential, parallel };

/// Entanglement swapping of two adjacent Bell-diagonal pairs.
///
/// Closed form of "noisy CNOT across the middle station, measure the two
/// middle qubits (one in the rotated basis), apply the outcome-conditioned
/// one-qubit correction". In (phase, amplitude) bit indexing the ideal swap
/// XORs the bits of the two input states; each measurement error flips the
/// corresponding residual bit with probability 1 - eta, the p1-reliable
/// correction keeps the result with weight p1, and the depolarized remainder
/// of total weight 1 - p1 p2 is maximally mixed:
///
///   out[P][A] = p1 p2 * sum s[p][a] t[q][b] e(P^p^q) e(A^a^b) + (1 - p1 p2)/4
///
/// with e(0) = eta, e(1) = 1 - eta. The result is identical for all four
/// measurement outcomes, so no averaging is needed here; the density-matrix
/// oracle asserts that outcome independence explicitly.
BellDiagonalState connect_pair(const BellDiagonalState& s1,
                               const BellDiagonalState& s2,
                               const NoiseParams& noise);

/// Fidelity after connecting a chain of n identical Werner pairs:
///   F_N = 1/4 { 1 + 3 [p1 p2 (4 eta^2 - 1)/3]^(N-1) [(4F - 1)/3]^N }.
double connect_chain_werner(double fidelity, int n_pairs,
                            const NoiseParams& noise);

struct ChainResult {
  BellDiagonalState state;
  int rounds = 0;
};

/// Folds connect_pair over a chain of pairs. Sequential folding connects one
/// pair per round; parallel folding connects adjacent pairs simultaneously
/// (an odd trailing pair is carried to the next round). Intermediate states
/// are not twirled.
ChainResult connect_chain(std::span<const BellDiagonalState> states,
                          ConnectionStrategy strategy,
                          const NoiseParams& noise);

}  // namespace repeaterlab

#endif  // REPEATERLAB_CONNECTION_HPP
