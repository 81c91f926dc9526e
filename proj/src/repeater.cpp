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

#include "repeaterlab/repeater.hpp"

#include <cmath>
#include <string>

#include "repeaterlab/connection.hpp"

namespace repeaterlab {

namespace {

constexpr int kMaxLoopSteps = 10000;
constexpr int kMaxGroupScan = 4096;
constexpr int kMaxWarmupCycles = 500;

struct LoopOutcome {
  BellDiagonalState state{};
  std::vector<double> p_even;
};

// Scheme A works on Werner states throughout, so its groups follow the
// twirled chain recursion; schemes B and C carry the exact Bell-diagonal
// fold (identical for L = 2 up to the twirl).
BellDiagonalState connect_group(Scheme scheme, const BellDiagonalState& state,
                                int group_size, const NoiseParams& noise) {
  if (scheme == Scheme::A) {
    return make_werner(
        connect_chain_werner(state.fidelity(), group_size, noise));
  }
  const std::vector<BellDiagonalState> chain(group_size, state);
  return connect_chain(chain, ConnectionStrategy::parallel, noise).state;
}

// Connects one group and purifies back to the working fidelity, keeping the
// full Bell-diagonal state. For scheme C the connected group itself is the
// constant auxiliary pair.
LoopOutcome run_loop(Scheme scheme, const BellDiagonalState& connected,
                     double working_fidelity, const NoiseParams& noise) {
  LoopOutcome out;
  out.state = scheme == Scheme::A ? twirl(connected) : connected;
  const BellDiagonalState aux = connected;
  for (int k = 0; k < kMaxLoopSteps; ++k) {
    if (out.state.fidelity() >= working_fidelity) {
      return out;
    }
    StepResult step{make_werner(0.25), 0.0};
    switch (scheme) {
      case Scheme::A:
        step = scheme_a_step(out.state.fidelity(), noise);
        break;
      case Scheme::B:
        step = scheme_b_step(out.state, noise);
        break;
      case Scheme::C:
        step = scheme_c_step(out.state, aux, noise);
        break;
    }
    if (step.state.fidelity() <= out.state.fidelity() + 1e-15) {
      throw InfeasibleLoopError(
          "purification loop cannot recover the working fidelity");
    }
    out.p_even.push_back(step.p_success);
    out.state = step.state;
  }
  throw InfeasibleLoopError("purification loop exceeded the step limit");
}

void validate_config(const RepeaterConfig& config) {
  config.noise.validate();
  config.timing.validate();
  if (!(config.working_fidelity > 0.25 && config.working_fidelity <= 1.0)) {
    throw std::domain_error("working fidelity must lie in (1/4, 1]");
  }
  if (!(config.aux_epsilon >= 0.0 && config.aux_epsilon <= 1.0)) {
    throw std::domain_error("aux epsilon must lie in [0, 1]");
  }
}

}  // namespace

int nesting_levels(long n_segments, int group_size) {
  if (n_segments < 1) {
    throw std::invalid_argument("segment count must be positive");
  }
  if (n_segments == 1) {
    return 0;
  }
  if (group_size < 2) {
    throw std::invalid_argument("group size must be at least 2");
  }
  long value = 1;
  for (int n = 1; n <= 63; ++n) {
    if (value > n_segments / group_size) {
      break;
    }
    value *= group_size;
    if (value == n_segments) {
      return n;
    }
  }
  throw std::invalid_argument("segment count must be a power of the group size");
}

LoopDiagnostics check_loop(double working_fidelity, int group_size,
                           Scheme scheme, const NoiseParams& noise,
                           double aux_epsilon) {
  noise.validate();
  if (group_size < 2) {
    throw std::invalid_argument("group size must be at least 2");
  }
  LoopDiagnostics diag;

  if (scheme == Scheme::C) {
    const BellDiagonalState elem =
        epsilon_state(working_fidelity, aux_epsilon);
    auto fixpoint_for = [&](int g) -> std::optional<double> {
      const BellDiagonalState aux = connect_group(Scheme::C, elem, g, noise);
      try {
        return iterate_to_fixpoint(Scheme::C, aux, aux, noise)
            .state.fidelity();
      } catch (const std::runtime_error&) {
        return std::nullopt;
      }
    };
    const BellDiagonalState aux = connect_group(Scheme::C, elem, group_size, noise);
    diag.f_after_connection = aux.fidelity();
    const auto fix = fixpoint_for(group_size);
    diag.f_max = fix;
    diag.feasible = fix.has_value() && *fix >= working_fidelity;
    for (int g = 2; g <= kMaxGroupScan; ++g) {
      const auto f = fixpoint_for(g);
      if (!f.has_value() || *f < working_fidelity) {
        break;
      }
      diag.max_feasible_group = g;
    }
    return diag;
  }

  const FixpointReport fp = scheme == Scheme::A ? scheme_a_fixpoints(noise)
                                                : scheme_b_fixpoints(noise);
  diag.f_after_connection =
      connect_chain_werner(working_fidelity, group_size, noise);
  diag.f_min = fp.f_min;
  diag.f_max = fp.f_max;
  if (!fp.purification_possible || working_fidelity >= *fp.f_max) {
    return diag;
  }
  diag.feasible = diag.f_after_connection > *fp.f_min;
  for (int g = 2; g <= kMaxGroupScan; ++g) {
    if (connect_chain_werner(working_fidelity, g, noise) <= *fp.f_min) {
      break;
    }
    diag.max_feasible_group = g;
  }
  return diag;
}

BellDiagonalState steady_working_state(Scheme scheme, double working_fidelity,
                                       int group_size,
                                       const NoiseParams& noise) {
  BellDiagonalState state = make_werner(working_fidelity);
  BellDiagonalState previous = state;
  for (int cycle = 0; cycle < kMaxWarmupCycles; ++cycle) {
    const BellDiagonalState next =
        run_loop(scheme, connect_group(scheme, state, group_size, noise),
                 working_fidelity, noise)
            .state;
    if (max_component_distance(next, state) < 1e-13 ||
        (cycle > 0 && max_component_distance(next, previous) < 1e-13)) {
      return next;
    }
    previous = state;
    state = next;
  }
  throw std::runtime_error("working-state warm-up did not settle");
}

BellDiagonalState elementary_state(const RepeaterConfig& config) {
  validate_config(config);
  ElementaryShape shape = config.elementary;
  if (shape == ElementaryShape::scheme_default) {
    shape = config.scheme == Scheme::A ? ElementaryShape::werner
                                       : ElementaryShape::epsilon;
  }
  switch (shape) {
    case ElementaryShape::werner:
      return make_werner(config.working_fidelity);
    case ElementaryShape::epsilon:
      return epsilon_state(config.working_fidelity, config.aux_epsilon);
    case ElementaryShape::steady:
      return steady_working_state(config.scheme, config.working_fidelity,
                                  config.group_size, config.noise);
    case ElementaryShape::scheme_default:
      break;
  }
  throw std::logic_error("unresolved elementary shape");
}

RepeaterReport run_nested(const RepeaterConfig& config) {
  validate_config(config);
  const int levels = nesting_levels(config.n_segments, config.group_size);

  RepeaterReport report;
  report.final_state = elementary_state(config);
  double physical_ab = 1.0;
  for (int level = 1; level <= levels; ++level) {
    const BellDiagonalState connected =
        connect_group(config.scheme, report.final_state, config.group_size,
                      config.noise);
    LoopOutcome loop;
    try {
      loop = run_loop(config.scheme, connected, config.working_fidelity,
                      config.noise);
    } catch (const InfeasibleLoopError& e) {
      throw InfeasibleLoopError("level " + std::to_string(level) + ": " +
                                e.what());
    }

    LevelReport lr;
    lr.level = level;
    lr.fidelity_after_connection = connected.fidelity();
    lr.fidelity_after_purification = loop.state.fidelity();
    lr.k_max = static_cast<int>(loop.p_even.size());
    if (config.scheme == Scheme::C) {
      lr.pairs_per_loop = pairs_consumed_c(loop.p_even);
      lr.steps_per_loop = steps_performed_c(loop.p_even);
    } else {
      lr.pairs_per_loop = pairs_consumed_ab(loop.p_even);
    }
    lr.p_even = loop.p_even;
    report.total_resources *= config.group_size * lr.pairs_per_loop;
    physical_ab *= lr.pairs_per_loop;
    report.per_level.push_back(std::move(lr));
    report.final_state = loop.state;
  }
  report.physical_per_segment =
      config.scheme == Scheme::C ? 1.0 + levels : physical_ab;
  return report;
}

double total_resources(int group_size, std::span<const double> m_per_level) {
  double r = 1.0;
  for (double m : m_per_level) {
    r *= group_size * m;
  }
  return r;
}

}  // namespace repeaterlab
