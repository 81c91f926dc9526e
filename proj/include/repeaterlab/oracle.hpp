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

#ifndef REPEATERLAB_ORACLE_HPP
#define REPEATERLAB_ORACLE_HPP

#include <Eigen/Dense>
#include <array>
#include <span>

#include "repeaterlab/bell_state.hpp"
#include "repeaterlab/noise.hpp"
#include "repeaterlab/purification.hpp"

namespace repeaterlab {

// Brute-force dense simulator used as ground truth for the closed-form maps.
// It is deliberately unoptimized: every operation materializes full
// 2^n x 2^n matrices and every constructed state is re-validated.
//
// Qubit ordering convention, fixed for good: qubit 0 is the most significant
// bit of the computational basis index, and pair k of a multi-pair register
// occupies qubits (2k, 2k+1).

/// Dense Hermitian, unit-trace, positive matrix over up to 6 qubits.
class DensityMatrix {
 public:
  /// Validates hermiticity (1e-12), trace (1e-12) and spectrum (>= -1e-10).
  DensityMatrix(int n_qubits, Eigen::MatrixXcd matrix);

  /// Product state of Bell-diagonal pairs, pair k on qubits (2k, 2k+1).
  static DensityMatrix from_bell_pairs(std::span<const BellDiagonalState> pairs);

  /// Rank-one state |psi><psi| from a normalized amplitude vector.
  static DensityMatrix from_pure(const Eigen::VectorXcd& amplitudes);

  int n_qubits() const { return n_qubits_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

 private:
  int n_qubits_;
  Eigen::MatrixXcd matrix_;
};

Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_z();
Eigen::Matrix2cd hadamard_gate();
/// exp(-i theta X / 2).
Eigen::Matrix2cd rotation_x(double theta);
/// CNOT with the first (local) qubit as control.
Eigen::Matrix4cd cnot_gate();
/// Bell state by (phase, amplitude) bits in the two-qubit basis
/// {|00>, |01>, |10>, |11>} with the first qubit most significant.
Eigen::Vector4cd bell_state_vector(int phase, int amp);

/// p1 * U rho U^dag + (1 - p1)/2 * tr_target(rho) (x) I_target.
/// Throws if the target is out of range or the gate is not unitary (1e-12).
DensityMatrix apply_noisy_one_qubit(const DensityMatrix& rho,
                                    const Eigen::Matrix2cd& gate, int target,
                                    double p1);

/// p2 * U rho U^dag + (1 - p2)/4 * tr_{ab}(rho) (x) I_{ab}. The gate's local
/// qubit order is (q_a, q_b).
DensityMatrix apply_noisy_two_qubit(const DensityMatrix& rho,
                                    const Eigen::Matrix4cd& gate, int q_a,
                                    int q_b, double p2);

struct PovmOutcome {
  int outcome;
  double probability;
  DensityMatrix post_state;  ///< measured qubit removed
};

/// eta-quality computational-basis measurement. The post states are the
/// outcome-conditioned normalized partial traces; a zero-probability outcome
/// carries the maximally mixed state as a placeholder.
std::array<PovmOutcome, 2> measure_povm(const DensityMatrix& rho, int target,
                                        double eta);

/// Full-circuit simulation of one purification step for scheme A or B
/// (scheme C uses the scheme B circuit with its auxiliary pair passed as s2).
/// Builds the 4-qubit product state, applies the bilateral noisy joint gates,
/// measures the second pair and postselects on coincident outcomes.
StepResult oracle_purification_step(const BellDiagonalState& s1,
                                    const BellDiagonalState& s2, Scheme scheme,
                                    const NoiseParams& noise);

/// Full-circuit simulation of entanglement swapping: noisy Bell measurement
/// on the middle qubits, noisy outcome-conditioned correction on the far
/// qubit, average over outcomes. Throws std::runtime_error if the four
/// outcome-conditioned results disagree beyond 1e-9.
BellDiagonalState oracle_connection(const BellDiagonalState& s1,
                                    const BellDiagonalState& s2,
                                    const NoiseParams& noise);

/// Bell-basis diagonal of a two-qubit state. Throws std::runtime_error if the
/// state has Bell-basis off-diagonal elements beyond 1e-9.
BellDiagonalState bell_components(const DensityMatrix& rho);

}  // namespace repeaterlab

#endif  // REPEATERLAB_ORACLE_HPP
