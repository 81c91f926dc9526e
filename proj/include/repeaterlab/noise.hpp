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

#ifndef REPEATERLAB_NOISE_HPP
#define REPEATERLAB_NOISE_HPP

#include <utility>

namespace repeaterlab {

/// Stochastic error model of the local operations.
///
/// A noisy gate acts as the ideal gate with probability weight p and as a
/// complete depolarization of the qubits it touches with weight 1-p; p1 and
/// p2 are those reliabilities for one- and two-qubit gates. eta is the
/// probability that a single-qubit measurement reports the correct basis
/// outcome. A noisy Bell measurement is modeled as one p2-reliable two-qubit
/// gate followed by two eta-quality measurements.
struct NoiseParams {
  double p1 = 1.0;
  double p2 = 1.0;
  double eta = 1.0;

  static NoiseParams perfect() { return NoiseParams{1.0, 1.0, 1.0}; }

  /// All three parameters set to 1 - error_rate.
  static NoiseParams from_error_rate(double error_rate);

  /// Throws std::domain_error unless every field lies in [0, 1].
  void validate() const;
};

/// Reliability of two local operations executed as one joint operation.
double compose_reliability(double pa, double pb);

/// Outcome probabilities of an eta-quality measurement on a qubit whose
/// reduced state has weight p0_weight on |0>. Returns {P(read 0), P(read 1)};
/// the two always sum to one.
std::pair<double, double> povm_probabilities(double p0_weight, double eta);

}  // namespace repeaterlab

#endif  // REPEATERLAB_NOISE_HPP
