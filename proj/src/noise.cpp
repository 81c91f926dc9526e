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

#include "repeaterlab/noise.hpp"

#include <stdexcept>
#include <string>

namespace repeaterlab {

namespace {

void check_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error(std::string(what) + " must lie in [0, 1]");
  }
}

}  // namespace

NoiseParams NoiseParams::from_error_rate(double error_rate) {
  check_unit_interval(error_rate, "error rate");
  const double p = 1.0 - error_rate;
  return NoiseParams{p, p, p};
}

void NoiseParams::validate() const {
  check_unit_interval(p1, "p1");
  check_unit_interval(p2, "p2");
  check_unit_interval(eta, "eta");
}

double compose_reliability(double pa, double pb) {
  check_unit_interval(pa, "reliability");
  check_unit_interval(pb, "reliability");
  return pa * pb;
}

std::pair<double, double> povm_probabilities(double p0_weight, double eta) {
  check_unit_interval(p0_weight, "p0 weight");
  check_unit_interval(eta, "eta");
  const double p0 = eta * p0_weight + (1.0 - eta) * (1.0 - p0_weight);
  return {p0, 1.0 - p0};
}

}  // namespace repeaterlab
