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

#include "repeaterlab/timing.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "repeaterlab/repeater.hpp"

namespace repeaterlab {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t root, std::uint64_t run,
                          std::uint64_t level) {
  return splitmix64(splitmix64(root ^ kGolden * (run + 1)) ^
                    kGolden * (level + 1));
}

// 53-bit uniform in [0, 1); independent of the standard library's
// distribution internals so seeded results are stable across platforms.
double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

int log2_exact(int value) {
  if (value >= 2 && (value & (value - 1)) == 0) {
    int l = 0;
    while ((1 << l) < value) {
      ++l;
    }
    return l;
  }
  throw std::domain_error("group size must be a power of two");
}

struct CostModel {
  int group_size = 2;
  double creation_ops = 0.0;
  double step_ops = 0.0;
  double tau_pair = 0.0;
  std::vector<double> conn_comm;  // per level, index 1..n
  std::vector<double> step_comm;
  std::vector<std::vector<double>> ladders;
};

CostModel make_cost_model(const RepeaterConfig& config) {
  const int l = log2_exact(config.group_size);
  const int levels = nesting_levels(config.n_segments, config.group_size);
  const RepeaterReport trajectory = run_nested(config);
  const TimingParams& t = config.timing;

  CostModel model;
  model.group_size = config.group_size;
  model.creation_ops = 3.0 * l * t.tau_op;
  model.step_ops = 3.0 * t.tau_op;
  model.tau_pair = tau_pair_afc(t);
  model.conn_comm.resize(levels + 1, 0.0);
  model.step_comm.resize(levels + 1, 0.0);
  model.ladders.resize(levels + 1);
  for (int m = 1; m <= levels; ++m) {
    const double f = std::pow(config.group_size, m);
    model.conn_comm[m] = f * (config.group_size - 1) * t.tau_class;
    model.step_comm[m] = f * config.group_size * t.tau_class;
    model.ladders[m] = trajectory.per_level[m - 1].p_even;
  }
  return model;
}

struct LevelStats {
  std::vector<double> sum;
  std::vector<long> count;
};

double build_pair(const CostModel& model, int level,
                  std::vector<std::mt19937_64>& engines, LevelStats& stats) {
  if (level == 0) {
    stats.sum[0] += model.tau_pair;
    ++stats.count[0];
    return model.tau_pair;
  }
  auto create = [&]() {
    // All sibling segments build in parallel; wait for the slowest.
    double slowest = 0.0;
    for (int j = 0; j < model.group_size; ++j) {
      slowest = std::max(slowest, build_pair(model, level - 1, engines, stats));
    }
    return slowest + model.creation_ops + model.conn_comm[level];
  };

  double clock = create();  // the pair to be purified
  const std::vector<double>& ladder = model.ladders[level];
  std::mt19937_64& eng = engines[level];
  std::size_t k = 0;
  while (k < ladder.size()) {
    clock += create();  // fresh auxiliary pair
    clock += model.step_ops + model.step_comm[level];
    if (uniform01(eng) < ladder[k]) {
      ++k;
    } else {
      k = 0;
      clock += create();  // failure discards the target as well
    }
  }
  stats.sum[level] += clock;
  ++stats.count[level];
  return clock;
}

}  // namespace

TimingParams TimingParams::derived(double tau_op, double l_segment, double l0,
                                   double c) {
  TimingParams p;
  p.tau_op = tau_op;
  p.l_segment = l_segment;
  p.l0 = l0;
  p.c = c;
  p.tau_class = l_segment / c;
  p.validate();
  return p;
}

void TimingParams::validate() const {
  for (double v : {tau_op, tau_class, l_segment, l0, c}) {
    if (!(v > 0.0)) {
      throw std::domain_error("timing parameters must be strictly positive");
    }
  }
}

double tau_pair_afc(const TimingParams& p) {
  p.validate();
  return (5.0 * p.tau_op + 2.0 * p.tau_class) * std::exp(p.l_segment / p.l0);
}

double total_time_ab(const RepeaterConfig& config,
                     std::span<const int> k_max_per_level) {
  const int l = log2_exact(config.group_size);
  const int levels = nesting_levels(config.n_segments, config.group_size);
  if (static_cast<int>(k_max_per_level.size()) != levels) {
    throw std::invalid_argument("need one k_max entry per nesting level");
  }
  const TimingParams& t = config.timing;
  t.validate();
  const int group = config.group_size;

  double total = tau_pair_afc(t);
  double pair_length = 1.0;  // segments spanned by the pairs entering level m
  for (int m = 1; m <= levels; ++m) {
    total += 3.0 * l * t.tau_op + (group - 1) * pair_length * t.tau_class;
    total += k_max_per_level[m - 1] *
             (3.0 * t.tau_op + pair_length * group * t.tau_class);
    pair_length *= group;
  }
  return total;
}

TimeReport simulate_time_c(const RepeaterConfig& config, int runs,
                           std::uint64_t seed) {
  if (config.scheme != Scheme::C) {
    throw std::invalid_argument("time simulation applies to scheme C");
  }
  if (runs < 1) {
    throw std::domain_error("need at least one run");
  }
  const CostModel model = make_cost_model(config);
  const int levels = static_cast<int>(model.ladders.size()) - 1;

  LevelStats stats;
  stats.sum.assign(levels + 1, 0.0);
  stats.count.assign(levels + 1, 0);

  std::vector<double> totals(runs, 0.0);
  for (int r = 0; r < runs; ++r) {
    std::vector<std::mt19937_64> engines;
    engines.reserve(levels + 1);
    for (int m = 0; m <= levels; ++m) {
      engines.emplace_back(stream_seed(seed, r, m));
    }
    totals[r] = build_pair(model, levels, engines, stats);
  }

  TimeReport report;
  report.runs = runs;
  double mean = 0.0;
  for (double t : totals) {
    mean += t;
  }
  mean /= runs;
  double var = 0.0;
  for (double t : totals) {
    var += (t - mean) * (t - mean);
  }
  report.mean_total = mean;
  report.std_total = std::sqrt(var / runs);
  report.mean_per_level.resize(levels + 1, 0.0);
  for (int m = 0; m <= levels; ++m) {
    report.mean_per_level[m] =
        stats.count[m] > 0 ? stats.sum[m] / stats.count[m] : 0.0;
  }
  return report;
}

double analytic_time_c(const RepeaterConfig& config) {
  if (config.scheme != Scheme::C) {
    throw std::invalid_argument("time estimate applies to scheme C");
  }
  const CostModel model = make_cost_model(config);
  double t = model.tau_pair;
  for (std::size_t m = 1; m < model.ladders.size(); ++m) {
    const double pairs = pairs_consumed_c(model.ladders[m]);
    const double steps = steps_performed_c(model.ladders[m]);
    t = (t + model.creation_ops + model.conn_comm[m]) * pairs +
        steps * (model.step_ops + model.step_comm[m]);
  }
  return t;
}

}  // namespace repeaterlab
