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

#ifndef REPEATERLAB_PURIFICATION_HPP
#define REPEATERLAB_PURIFICATION_HPP

#include <optional>
#include <span>
#include <vector>

#include "repeaterlab/bell_state.hpp"
#include "repeaterlab/noise.hpp"

namespace repeaterlab {

enum class Scheme { A, B, C };

const char* scheme_name(Scheme s);

/// Outcome of one recurrence step: the state of the kept pair conditioned on
/// coincident measurement outcomes, and the probability of that coincidence.
struct StepResult {
  BellDiagonalState state;
  double p_success;
};

/// One recurrence step on a (kept, measured) pair of Bell-diagonal pairs.
///
/// Closed form of the circuit "bilateral two-qubit gates, then measure both
/// qubits of the second pair and keep coincident outcomes" under the
/// stochastic noise model. With the (phase, amplitude) bit indexing of
/// BellDiagonalState, the bilateral CNOTs add the measured pair's phase bit
/// into the kept pair's phase bit and the kept pair's amplitude bit into the
/// measured pair's amplitude bit. A residual amplitude bit 0 on the measured
/// pair gives coincident true outcomes, so the measurement weight is
/// eta^2 + (1-eta)^2 for residual 0 and 2 eta (1-eta) for residual 1. The two
/// p2-reliable gates contribute p2^2 times the ideal circuit plus a fully
/// depolarized remainder of weight 1 - p2^2, which survives the coincidence
/// filter with probability 1/2 and leaves the kept pair maximally mixed:
///
///   out[P][A] = p2^2 * sum_q s[q][A] * ( t[q^P][A] we + t[q^P][1-A] wo )
///               + (1 - p2^2)/8 ,
///
/// where s, t are the kept/measured weights by (phase, amplitude) bit, with
/// the Psi- and Phi- weights swapped first when `deutsch_rotations` is set
/// (the bilateral pi/2 x-rotations folded into the joint gates exchange
/// those two Bell states). p_success is the sum of the four outputs.
///
/// The same expression, coefficients frozen here, is validated against the
/// brute-force density-matrix oracle to 1e-12 by the test suite.
StepResult recurrence_step(const BellDiagonalState& kept,
                           const BellDiagonalState& measured,
                           bool deutsch_rotations, const NoiseParams& noise);

/// Werner-to-Werner recursion step (scheme A): twirls, runs the recurrence
/// without pre-rotations, twirls again. Returns the new Werner state and the
/// coincidence probability. Evaluates the analytic closed form directly.
StepResult scheme_a_step(double fidelity, const NoiseParams& noise);

/// Bell-diagonal recursion step on two identical pairs (scheme B).
StepResult scheme_b_step(const BellDiagonalState& s, const NoiseParams& noise);

/// Scheme B circuit with the measured pair held at a constant auxiliary
/// state (scheme C).
StepResult scheme_c_step(const BellDiagonalState& target,
                         const BellDiagonalState& aux,
                         const NoiseParams& noise);

/// Stationary fidelities of the scheme A recursion. f_trivial = 1/4 always;
/// f_min / f_max are the other two roots when they are real. Purification is
/// possible only on the open interval (f_min, f_max).
struct FixpointReport {
  double f_trivial = 0.25;
  std::optional<double> f_min;
  std::optional<double> f_max;
  bool purification_possible = false;
};

/// Closed-form fixpoints of the scheme A recursion.
FixpointReport scheme_a_fixpoints(const NoiseParams& noise);

/// Numerically determined fixpoints of the scheme B recursion over Werner
/// starting states: f_max is the fidelity of the attractor, f_min the
/// smallest Werner fidelity (found by bisection) from which the iteration
/// escapes the trivial fixpoint.
FixpointReport scheme_b_fixpoints(const NoiseParams& noise);

struct FixpointResult {
  BellDiagonalState state;
  int steps = 0;
};

/// Iterates the chosen scheme's step map until the state moves by less than
/// `tolerance` in max norm (scheme A tracks the Werner fidelity). `aux` is
/// required for scheme C and ignored otherwise. Throws std::runtime_error if
/// the iteration has not settled after `max_iterations`.
FixpointResult iterate_to_fixpoint(Scheme scheme, const BellDiagonalState& start,
                                   const std::optional<BellDiagonalState>& aux,
                                   const NoiseParams& noise,
                                   double tolerance = 1e-10,
                                   int max_iterations = 10000);

/// Resource accounting for one purification run.
struct ResourceReport {
  int k_max = 0;    ///< successful steps performed
  double m = 1.0;   ///< average pairs consumed
  double s = 0.0;   ///< average steps including failures (scheme C only)
  std::vector<double> p_even;  ///< success probability of each step
};

/// Average pairs consumed by schemes A/B: prod_k 2 / p_even(k).
double pairs_consumed_ab(std::span<const double> p_even);

/// Average auxiliary-pair creations for scheme C: M_{k+1} = (M_k + 1)/p_even(k+1)
/// seeded with M_0 = 1.
double pairs_consumed_c(std::span<const double> p_even);

/// Average number of steps including failures for scheme C:
/// S_{k+1} = (S_k + 1)/p_even(k+1) seeded with S_0 = 0.
double steps_performed_c(std::span<const double> p_even);

/// Runs scheme A or B steps from `start` until the fidelity reaches
/// `f_target`, recording per-step success probabilities. Throws
/// std::runtime_error if the target cannot be reached (start below the
/// purification threshold or target above the reachable ceiling).
ResourceReport resources_ab(Scheme scheme, const BellDiagonalState& start,
                            double f_target, const NoiseParams& noise);

/// Scheme C resources: the target pair starts in the auxiliary state and is
/// purified by it until `f_target` is reached.
ResourceReport resources_c(const BellDiagonalState& aux, double f_target,
                           const NoiseParams& noise);

/// Attractor fidelity of the scheme C step when every state is forced to
/// Werner form: the target is twirled after each step and the auxiliary pair
/// is Werner with the given fidelity. Starts from the auxiliary fidelity.
double werner_scheme_c_fixpoint(double aux_fidelity, const NoiseParams& noise);

}  // namespace repeaterlab

#endif  // REPEATERLAB_PURIFICATION_HPP
