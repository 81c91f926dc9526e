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

#include "repeaterlab/purification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace repeaterlab {

namespace {

constexpr int kMaxResourceSteps = 10000;

using BitGrid = std::array<std::array<double, 2>, 2>;

// Weights indexed by (phase, amplitude) bit; the pre-rotations of the
// Deutsch-style circuit exchange Psi- and Phi-, i.e. the two phase-1 slots.
BitGrid to_bits(const BellDiagonalState& s, bool deutsch_rotations) {
  BitGrid g{};
  g[0][0] = s.a;
  g[0][1] = s.c;
  g[1][0] = deutsch_rotations ? s.b : s.d;
  g[1][1] = deutsch_rotations ? s.d : s.b;
  return g;
}

}  // namespace

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::A:
      return "A";
    case Scheme::B:
      return "B";
    case Scheme::C:
      return "C";
  }
  return "?";
}

StepResult recurrence_step(const BellDiagonalState& kept,
                           const BellDiagonalState& measured,
                           bool deutsch_rotations, const NoiseParams& noise) {
  noise.validate();
  const BitGrid s = to_bits(kept, deutsch_rotations);
  const BitGrid t = to_bits(measured, deutsch_rotations);
  const double eta = noise.eta;
  const double we = eta * eta + (1.0 - eta) * (1.0 - eta);
  const double wo = 2.0 * eta * (1.0 - eta);
  const double p22 = noise.p2 * noise.p2;
  const double mixed = (1.0 - p22) / 8.0;

  BitGrid out{};
  double p_even = 0.0;
  for (int phase = 0; phase < 2; ++phase) {
    for (int amp = 0; amp < 2; ++amp) {
      double ideal = 0.0;
      for (int q = 0; q < 2; ++q) {
        ideal += s[q][amp] *
                 (t[q ^ phase][amp] * we + t[q ^ phase][amp ^ 1] * wo);
      }
      out[phase][amp] = p22 * ideal + mixed;
      p_even += out[phase][amp];
    }
  }
  if (p_even <= 0.0) {
    throw std::runtime_error("recurrence step has vanishing success probability");
  }
  const BellDiagonalState state =
      make_bell_diagonal(out[0][0] / p_even, out[1][1] / p_even,
                         out[0][1] / p_even, out[1][0] / p_even);
  return StepResult{state, p_even};
}

StepResult scheme_a_step(double fidelity, const NoiseParams& noise) {
  noise.validate();
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
    throw std::domain_error("fidelity must lie in [0, 1]");
  }
  const double f = fidelity;
  const double g = (1.0 - f) / 3.0;
  const double eta = noise.eta;
  const double we = eta * eta + (1.0 - eta) * (1.0 - eta);
  const double wo = 2.0 * eta * (1.0 - eta);
  const double p22 = noise.p2 * noise.p2;

  // Werner recursion with both the numerator and the coincidence probability
  // multiplied through by p2^2, which keeps the p2 -> 0 limit finite.
  const double numerator =
      p22 * ((f * f + g * g) * we + (f * g + g * g) * wo) + (1.0 - p22) / 8.0;
  const double p_even =
      p22 * ((f * f + (2.0 / 3.0) * f * (1.0 - f) +
              (5.0 / 9.0) * (1.0 - f) * (1.0 - f)) *
                 we +
             (f * g + g * g) * 4.0 * wo) +
      (1.0 - p22) / 2.0;
  if (p_even <= 0.0) {
    throw std::runtime_error("scheme A step has vanishing success probability");
  }
  const double f_prime = std::min(numerator / p_even, 1.0);
  return StepResult{make_werner(f_prime), p_even};
}

StepResult scheme_b_step(const BellDiagonalState& s, const NoiseParams& noise) {
  return recurrence_step(s, s, true, noise);
}

StepResult scheme_c_step(const BellDiagonalState& target,
                         const BellDiagonalState& aux,
                         const NoiseParams& noise) {
  return recurrence_step(target, aux, true, noise);
}

FixpointReport scheme_a_fixpoints(const NoiseParams& noise) {
  noise.validate();
  FixpointReport report;
  if (noise.p2 <= 0.0) {
    return report;
  }
  const double eta = noise.eta;
  const double p22 = noise.p2 * noise.p2;
  const double ee = eta * (eta - 1.0);
  const double center = 8.0 * ee + 3.0;
  const double denom = 16.0 * ee + 4.0;
  double disc = 10.0 - 9.0 / p22 + 64.0 * std::pow(eta, 4) -
                128.0 * std::pow(eta, 3) + 116.0 * eta * eta - 52.0 * eta -
                36.0 * ee / p22;
  if (denom <= 1e-12 || disc < -1e-12) {
    return report;
  }
  disc = std::max(disc, 0.0);
  const double root = std::sqrt(disc);
  const double f_min = (center - root) / denom;
  const double f_max = std::min((center + root) / denom, 1.0);
  if (!(f_min > 0.25 && f_min <= f_max && f_max <= 1.0 + 1e-12)) {
    return report;
  }
  report.f_min = f_min;
  report.f_max = f_max;
  report.purification_possible = f_max - f_min > 1e-12;
  return report;
}

namespace {

// Iterates the scheme B map from a Werner start without throwing; returns the
// fidelity after convergence or after the iteration cap.
double iterate_b_quiet(double f0, const NoiseParams& noise, int cap) {
  BellDiagonalState state = make_werner(f0);
  for (int i = 0; i < cap; ++i) {
    const BellDiagonalState next = scheme_b_step(state, noise).state;
    const double delta = max_component_distance(state, next);
    state = next;
    if (delta < 1e-13) {
      break;
    }
  }
  return state.fidelity();
}

}  // namespace

FixpointReport scheme_b_fixpoints(const NoiseParams& noise) {
  noise.validate();
  FixpointReport report;
  constexpr int kCap = 20000;
  constexpr double kEscape = 1e-4;

  double f_max = -1.0;
  for (double start : {0.999, 0.99, 0.95, 0.9, 0.8, 0.7, 0.6}) {
    const double f_end = iterate_b_quiet(start, noise, kCap);
    if (f_end > 0.25 + kEscape) {
      f_max = f_end;
      break;
    }
  }
  if (f_max < 0.0) {
    return report;
  }

  // The basin boundary between the trivial fixpoint and the attractor is
  // sharp; bisect on the Werner starting fidelity.
  const double separator = 0.5 * (0.25 + f_max);
  double lo = 0.25;
  double hi = f_max;
  for (int i = 0; i < 80 && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (iterate_b_quiet(mid, noise, kCap) > separator) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  report.f_min = 0.5 * (lo + hi);
  report.f_max = f_max;
  report.purification_possible = f_max - *report.f_min > 1e-12;
  return report;
}

FixpointResult iterate_to_fixpoint(Scheme scheme, const BellDiagonalState& start,
                                   const std::optional<BellDiagonalState>& aux,
                                   const NoiseParams& noise, double tolerance,
                                   int max_iterations) {
  if (scheme == Scheme::C && !aux.has_value()) {
    throw std::invalid_argument("scheme C requires an auxiliary state");
  }
  BellDiagonalState state = scheme == Scheme::A ? twirl(start) : start;
  for (int step = 1; step <= max_iterations; ++step) {
    BellDiagonalState next;
    switch (scheme) {
      case Scheme::A:
        next = scheme_a_step(state.fidelity(), noise).state;
        break;
      case Scheme::B:
        next = scheme_b_step(state, noise).state;
        break;
      case Scheme::C:
        next = scheme_c_step(state, *aux, noise).state;
        break;
    }
    const double delta = max_component_distance(state, next);
    state = next;
    if (delta < tolerance) {
      return FixpointResult{state, step};
    }
  }
  throw std::runtime_error("fixpoint iteration did not converge");
}

double pairs_consumed_ab(std::span<const double> p_even) {
  double m = 1.0;
  for (double p : p_even) {
    m *= 2.0 / p;
  }
  return m;
}

double pairs_consumed_c(std::span<const double> p_even) {
  double m = 1.0;
  for (double p : p_even) {
    m = (m + 1.0) / p;
  }
  return m;
}

double steps_performed_c(std::span<const double> p_even) {
  double s = 0.0;
  for (double p : p_even) {
    s = (s + 1.0) / p;
  }
  return s;
}

namespace {

ResourceReport purify_until(Scheme scheme, BellDiagonalState state,
                            const std::optional<BellDiagonalState>& aux,
                            double f_target, const NoiseParams& noise) {
  ResourceReport report;
  if (state.fidelity() >= f_target) {
    return report;
  }
  for (int k = 1; k <= kMaxResourceSteps; ++k) {
    StepResult step;
    switch (scheme) {
      case Scheme::A:
        step = scheme_a_step(state.fidelity(), noise);
        break;
      case Scheme::B:
        step = scheme_b_step(state, noise);
        break;
      case Scheme::C:
        step = scheme_c_step(state, *aux, noise);
        break;
    }
    if (step.state.fidelity() <= state.fidelity() + 1e-15) {
      throw std::runtime_error(
          "purification target unreachable: fidelity stopped improving");
    }
    report.p_even.push_back(step.p_success);
    state = step.state;
    if (state.fidelity() >= f_target) {
      report.k_max = k;
      if (scheme == Scheme::C) {
        report.m = pairs_consumed_c(report.p_even);
        report.s = steps_performed_c(report.p_even);
      } else {
        report.m = pairs_consumed_ab(report.p_even);
      }
      return report;
    }
  }
  throw std::runtime_error("purification target unreachable: step limit hit");
}

}  // namespace

ResourceReport resources_ab(Scheme scheme, const BellDiagonalState& start,
                            double f_target, const NoiseParams& noise) {
  if (scheme == Scheme::C) {
    throw std::invalid_argument("resources_ab handles schemes A and B only");
  }
  const BellDiagonalState s0 = scheme == Scheme::A ? twirl(start) : start;
  return purify_until(scheme, s0, std::nullopt, f_target, noise);
}

ResourceReport resources_c(const BellDiagonalState& aux, double f_target,
                           const NoiseParams& noise) {
  return purify_until(Scheme::C, aux, aux, f_target, noise);
}

double werner_scheme_c_fixpoint(double aux_fidelity, const NoiseParams& noise) {
  const BellDiagonalState aux = make_werner(aux_fidelity);
  double f = aux_fidelity;
  for (int i = 0; i < kMaxResourceSteps; ++i) {
    const double next =
        scheme_c_step(make_werner(f), aux, noise).state.fidelity();
    const double delta = std::abs(next - f);
    f = next;
    if (delta < 1e-12) {
      return f;
    }
  }
  throw std::runtime_error("Werner scheme C iteration did not converge");
}

}  // namespace repeaterlab
