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

#ifndef REPEATERLAB_TIMING_HPP
#define REPEATERLAB_TIMING_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace repeaterlab {

struct RepeaterConfig;

/// Temporal constants of the protocol.
struct TimingParams {
  double tau_op = 1e-5;           ///< seconds per local operation
  double tau_class = 10.0 / 3e5;  ///< seconds per one-segment classical message
  double l_segment = 10.0;        ///< segment length, km
  double l0 = 10.0;               ///< fiber half length, km
  double c = 3e5;                 ///< classical signal speed, km/s

  /// tau_class derived as l_segment / c.
  static TimingParams derived(double tau_op, double l_segment, double l0,
                              double c);

  /// Throws std::domain_error unless every field is strictly positive.
  void validate() const;
};

/// Expected time to create one elementary pair over a fiber segment with the
/// absorption-free channel: (5 tau_op + 2 tau_class) * exp(l_segment / l0).
double tau_pair_afc(const TimingParams& p);

/// Closed-form total time of the nested protocol for schemes A/B, built from
/// the per-level iteration
///   t(m) = t(m-1) + 3l tau_op + (2^l - 1) L^(m-1) tau_class
///          + k_max(m) (3 tau_op + L^m tau_class),   t(0) = tau_pair,
/// where L = 2^l (connections run in parallel) and L^(m-1) is the length of
/// the pairs entering level m in segments. `k_max_per_level` needs one entry
/// per nesting level. Throws std::domain_error if the group size is not a
/// power of two.
double total_time_ab(const RepeaterConfig& config,
                     std::span<const int> k_max_per_level);

struct TimeReport {
  double mean_total = 0.0;
  double std_total = 0.0;
  int runs = 0;
  /// Mean build time of one pair at each nesting level (index 0 = elementary).
  std::vector<double> mean_per_level;
};

/// Monte Carlo simulation of the scheme C build time.
///
/// Every pair creation at level m waits for the slowest of its 2^l sibling
/// sub-builds, then connects (3l tau_op + f(m)(2^l - 1) tau_class with
/// f(m) = L^m). Purification restarts from scratch on failure: each attempt
/// consumes one freshly built auxiliary pair and one step time
/// 3 tau_op + f(m) 2^l tau_class, and a failed attempt additionally discards
/// the target. Success probabilities come from the deterministic analytic
/// trajectory of the nested protocol.
///
/// Reproducibility: run r at level m draws from an independent engine seeded
/// by seed_{r,m} = splitmix64(splitmix64(seed ^ G*(r+1)) ^ G*(m+1)) with
/// G = 0x9E3779B97F4A7C15, consumed in protocol order, so reports depend
/// only on (config, runs, seed).
TimeReport simulate_time_c(const RepeaterConfig& config, int runs,
                           std::uint64_t seed);

/// Deterministic estimate of the scheme C build time using the average
/// resource counts instead of sampled ones. Underestimates the simulated
/// mean because it ignores the wait-for-the-slowest compounding.
double analytic_time_c(const RepeaterConfig& config);

}  // namespace repeaterlab

#endif  // REPEATERLAB_TIMING_HPP
