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

#ifndef REPEATERLAB_EXPERIMENT_HPP
#define REPEATERLAB_EXPERIMENT_HPP

#include <cstdint>
#include <span>
#include <string>

#include "repeaterlab/repeater.hpp"

namespace repeaterlab {

/// Fully resolved parameters of one CLI run. Every field is serialized to the
/// run-metadata sidecar, and a run is reproducible bit-identically from that
/// sidecar alone (`repeaterlab replay --config FILE`).
struct ExperimentConfig {
  std::string subcommand = "repeater";
  Scheme scheme = Scheme::B;
  NoiseParams noise{};
  bool eta_tied = false;  ///< fixpoints scan: eta follows the scanned p2
  long segments = 128;
  int group = 2;
  double working_fidelity = 0.96;
  double eps = 1.0;
  std::string elementary = "default";  ///< default | werner | epsilon | steady
  TimingParams timing{};
  int runs = 300;
  std::uint64_t seed = 1;
  double scan_lo = 0.0;
  double scan_hi = 1.0;
  int steps = 50;
  double f0 = 0.7;  ///< starting fidelity for converge
  std::string out = "out.csv";
};

/// Key=value text form, one key per line, doubles at full precision.
std::string serialize_config(const ExperimentConfig& config);

/// Inverse of serialize_config. Unset keys keep their defaults; unknown keys
/// throw std::invalid_argument.
ExperimentConfig parse_config_text(const std::string& text);

ExperimentConfig load_config_file(const std::string& path);

/// Parses and executes one CLI invocation (argv without the program name).
/// Exit codes: 0 success, 1 invalid configuration or usage, 2 infeasible
/// purification loop. The REPEATERLAB_SEED environment variable, when set,
/// overrides any --seed value.
int run_experiment(std::span<const std::string> args);

}  // namespace repeaterlab

#endif  // REPEATERLAB_EXPERIMENT_HPP
