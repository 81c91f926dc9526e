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

#ifndef REPEATERLAB_REPEATER_HPP
#define REPEATERLAB_REPEATER_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "repeaterlab/bell_state.hpp"
#include "repeaterlab/noise.hpp"
#include "repeaterlab/purification.hpp"
#include "repeaterlab/timing.hpp"

namespace repeaterlab {

/// Shape of the elementary pairs fed into the lowest nesting level.
///
/// `epsilon` uses the one-parameter shape family at the working fidelity
/// (eps = 1 is the binary state, the most purification-friendly shape).
/// `steady` runs warm-up cycles of connect-and-repurify until the
/// post-purification state settles, and uses that attractor state.
/// `scheme_default` resolves to werner for scheme A (which twirls anyway)
/// and epsilon for schemes B and C.
enum class ElementaryShape { scheme_default, werner, epsilon, steady };

struct RepeaterConfig {
  long n_segments = 128;  ///< N, must equal group_size^n
  int group_size = 2;     ///< L, pairs connected per purification loop
  Scheme scheme = Scheme::B;
  double working_fidelity = 0.96;  ///< restored at the end of every loop
  double aux_epsilon = 1.0;        ///< elementary shape parameter (scheme C)
  ElementaryShape elementary = ElementaryShape::scheme_default;
  NoiseParams noise{};
  TimingParams timing{};
};

/// A purification loop cannot be closed with the given parameters.
class InfeasibleLoopError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Number of nesting levels n with n_segments = group_size^n. Throws
/// std::invalid_argument if n_segments is not an exact power.
int nesting_levels(long n_segments, int group_size);

/// Feasibility of one connect-and-repurify loop at the given working
/// fidelity. For schemes A/B, feasible means the fidelity after connecting
/// `group_size` Werner pairs stays above f_min while the working fidelity
/// stays below f_max. For scheme C, f_max reports the reachable fixpoint
/// when the auxiliary pair is the connected group, and feasible means that
/// fixpoint reaches the working fidelity again. max_feasible_group is the
/// largest group size (up to 4096) for which the loop still closes, 0 if
/// none does.
struct LoopDiagnostics {
  double f_after_connection = 0.0;
  std::optional<double> f_min;
  std::optional<double> f_max;
  bool feasible = false;
  int max_feasible_group = 0;
};

LoopDiagnostics check_loop(double working_fidelity, int group_size,
                           Scheme scheme, const NoiseParams& noise,
                           double aux_epsilon = 1.0);

struct LevelReport {
  int level = 0;
  double fidelity_after_connection = 0.0;
  double fidelity_after_purification = 0.0;
  int k_max = 0;                ///< successful purification steps
  double pairs_per_loop = 1.0;  ///< M for this level
  double steps_per_loop = 0.0;  ///< S including failures (scheme C)
  std::vector<double> p_even;   ///< per-step success probabilities
};

struct RepeaterReport {
  std::vector<LevelReport> per_level;
  double total_resources = 1.0;       ///< R = prod_m (L * M_m)
  double physical_per_segment = 1.0;  ///< prod_m M_m for A/B, 1 + n for C
  BellDiagonalState final_state{};
};

/// Runs the nested protocol: per level, connect group_size pairs of the
/// previous level's state and purify back to the working fidelity. Resource
/// accounting uses the average pair consumption of each loop. Throws
/// InfeasibleLoopError when a loop cannot recover the working fidelity.
RepeaterReport run_nested(const RepeaterConfig& config);

/// prod_k (group_size * m_per_level[k]); equals N^(log_L M + 1) for uniform M.
double total_resources(int group_size, std::span<const double> m_per_level);

/// Post-purification state of the connect-and-repurify cycle at its
/// attractor, starting the warm-up from a Werner pair at the working
/// fidelity. Also accepts a settled period-two cycle.
BellDiagonalState steady_working_state(Scheme scheme, double working_fidelity,
                                       int group_size,
                                       const NoiseParams& noise);

/// Elementary state the nested run starts from, per the config's shape
/// policy.
BellDiagonalState elementary_state(const RepeaterConfig& config);

}  // namespace repeaterlab

#endif  // REPEATERLAB_REPEATER_HPP
