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

#ifndef REPEATERLAB_BELL_STATE_HPP
#define REPEATERLAB_BELL_STATE_HPP

namespace repeaterlab {

/// Two-qubit state diagonal in the Bell basis, stored as the four weights
/// (a, b, c, d) of |Phi+>, |Psi->, |Psi+>, |Phi->. The fidelity of the pair
/// is the |Phi+> weight `a`.
///
/// Each Bell state is indexed by a (phase, amplitude) bit pair:
///   Phi+ = (0,0), Psi+ = (0,1), Phi- = (1,0), Psi- = (1,1).
/// The phase bit distinguishes +/- superpositions, the amplitude bit
/// distinguishes correlated (|00>,|11>) from anti-correlated (|01>,|10>)
/// computational amplitudes. All closed-form maps in this library are
/// expressed through that indexing.
struct BellDiagonalState {
  double a;  ///< weight of |Phi+> (the fidelity)
  double b;  ///< weight of |Psi->
  double c;  ///< weight of |Psi+>
  double d;  ///< weight of |Phi->

  double fidelity() const { return a; }

  /// Weight of the Bell state with the given (phase, amplitude) bits.
  double component(int phase_bit, int amp_bit) const {
    return phase_bit == 0 ? (amp_bit == 0 ? a : c) : (amp_bit == 0 ? d : b);
  }
};

/// Validates, clamps and renormalizes a Bell-diagonal weight vector.
///
/// Weights slightly negative from rounding (>= -1e-12) are clamped to zero;
/// anything more negative throws std::domain_error. The weights must sum to
/// one within 1e-9 (they are then renormalized exactly); larger drift means
/// a map lost trace and throws std::runtime_error.
BellDiagonalState make_bell_diagonal(double a, double b, double c, double d);

/// Werner state of fidelity f: weights (f, g, g, g) with g = (1-f)/3.
/// Throws std::domain_error unless 0 <= f <= 1.
BellDiagonalState make_werner(double fidelity);

/// Depolarizes to Werner form, preserving the fidelity. The operation is
/// treated as noiseless.
BellDiagonalState twirl(const BellDiagonalState& s);

/// One-parameter shape family at fixed fidelity:
/// (f0, (1-f0)(1-eps)/2, (1-f0)(1-eps)/2, (1-f0)*eps).
/// eps = 1/3 reproduces the Werner state, eps = 1 the binary (a,d) state.
BellDiagonalState epsilon_state(double f0, double eps);

/// Largest absolute componentwise difference between two states.
double max_component_distance(const BellDiagonalState& x,
                              const BellDiagonalState& y);

}  // namespace repeaterlab

#endif  // REPEATERLAB_BELL_STATE_HPP
