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

#include "repeaterlab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "repeaterlab/connection.hpp"
#include "repeaterlab/purification.hpp"
#include "repeaterlab/timing.hpp"

namespace repeaterlab {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(const std::optional<double>& v) {
  return v.has_value() ? fmt(*v) : "nan";
}

std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 1) {
    throw std::domain_error("scan needs at least one step");
  }
  std::vector<double> xs(steps);
  for (int i = 0; i < steps; ++i) {
    xs[i] = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
  }
  return xs;
}

Scheme parse_scheme(const std::string& s) {
  if (s == "A" || s == "a") return Scheme::A;
  if (s == "B" || s == "b") return Scheme::B;
  if (s == "C" || s == "c") return Scheme::C;
  throw std::invalid_argument("scheme must be A, B or C");
}

ElementaryShape parse_elementary(const std::string& s) {
  if (s == "default") return ElementaryShape::scheme_default;
  if (s == "werner") return ElementaryShape::werner;
  if (s == "epsilon") return ElementaryShape::epsilon;
  if (s == "steady") return ElementaryShape::steady;
  throw std::invalid_argument("elementary must be default, werner, epsilon or steady");
}

RepeaterConfig to_repeater_config(const ExperimentConfig& e) {
  RepeaterConfig r;
  r.n_segments = e.segments;
  r.group_size = e.group;
  r.scheme = e.scheme;
  r.working_fidelity = e.working_fidelity;
  r.aux_epsilon = e.eps;
  r.elementary = parse_elementary(e.elementary);
  r.noise = e.noise;
  r.timing = e.timing;
  return r;
}

// ---------------------------------------------------------------------------
// subcommand runners

std::string csv_fixpoints(const ExperimentConfig& cfg) {
  struct Row {
    double p;
    std::optional<double> f_min, f_max;
  };
  std::vector<Row> rows;
  for (double p : linspace(cfg.scan_lo, cfg.scan_hi, cfg.steps)) {
    NoiseParams noise{1.0, p, cfg.eta_tied ? p : cfg.noise.eta};
    const FixpointReport fp = cfg.scheme == Scheme::A
                                  ? scheme_a_fixpoints(noise)
                                  : scheme_b_fixpoints(noise);
    rows.push_back(Row{p, fp.f_min, fp.f_max});
  }

  if (cfg.scheme == Scheme::A) {
    // Append the analytic breakdown point where the two fixpoints merge,
    // even when it falls outside the scanned range.
    std::optional<double> p_thr;
    double eta = cfg.noise.eta;
    if (cfg.eta_tied) {
      double lo = 0.75, hi = 1.0;
      if (!scheme_a_fixpoints(NoiseParams{1.0, lo, lo}).purification_possible) {
        for (int i = 0; i < 60; ++i) {
          const double mid = 0.5 * (lo + hi);
          if (scheme_a_fixpoints(NoiseParams{1.0, mid, mid})
                  .purification_possible) {
            hi = mid;
          } else {
            lo = mid;
          }
        }
        p_thr = hi;
        eta = hi;
      }
    } else {
      const double ee = eta * (eta - 1.0);
      const double num = 9.0 + 36.0 * ee;
      const double den = 10.0 + 64.0 * std::pow(eta, 4) -
                         128.0 * std::pow(eta, 3) + 116.0 * eta * eta -
                         52.0 * eta;
      if (num > 0.0 && den > 0.0 && num <= den) {
        p_thr = std::sqrt(num / den);
      }
    }
    if (p_thr.has_value()) {
      const double ee = eta * (eta - 1.0);
      const double f_thr = (8.0 * ee + 3.0) / (16.0 * ee + 4.0);
      rows.push_back(Row{*p_thr, f_thr, f_thr});
    }
  }

  std::sort(rows.begin(), rows.end(),
            [](const Row& x, const Row& y) { return x.p < y.p; });
  std::string csv = "p,f_min,f_max\n";
  for (const Row& r : rows) {
    csv += fmt(r.p) + "," + fmt(r.f_min) + "," + fmt(r.f_max) + "\n";
  }
  return csv;
}

std::string csv_converge(const ExperimentConfig& cfg) {
  std::string csv = "step,f_a,f_b\n";
  double f_a = cfg.f0;
  BellDiagonalState b = make_werner(cfg.f0);
  csv += "0," + fmt(f_a) + "," + fmt(b.fidelity()) + "\n";
  for (int step = 1; step <= cfg.steps; ++step) {
    f_a = scheme_a_step(f_a, cfg.noise).state.fidelity();
    b = scheme_b_step(b, cfg.noise).state;
    csv += std::to_string(step) + "," + fmt(f_a) + "," + fmt(b.fidelity()) + "\n";
  }
  return csv;
}

std::string csv_shape(const ExperimentConfig& cfg) {
  std::string csv = "eps,fixpoint\n";
  for (double eps : linspace(cfg.scan_lo, cfg.scan_hi, cfg.steps)) {
    const BellDiagonalState aux = epsilon_state(cfg.f0, eps);
    const double fix =
        iterate_to_fixpoint(Scheme::C, aux, aux, cfg.noise).state.fidelity();
    csv += fmt(eps) + "," + fmt(fix) + "\n";
  }
  return csv;
}

std::string csv_loop(const ExperimentConfig& cfg) {
  std::string csv = "f,f_after_connection,f_min,f_max,feasible,max_feasible_group\n";
  for (double f : linspace(cfg.scan_lo, cfg.scan_hi, cfg.steps)) {
    const LoopDiagnostics d =
        check_loop(f, cfg.group, cfg.scheme, cfg.noise, cfg.eps);
    csv += fmt(f) + "," + fmt(d.f_after_connection) + "," + fmt(d.f_min) +
           "," + fmt(d.f_max) + "," + (d.feasible ? "1" : "0") + "," +
           std::to_string(d.max_feasible_group) + "\n";
  }
  return csv;
}

std::string csv_resources(const ExperimentConfig& cfg) {
  // Resources of a single purification loop (one nesting level) at each
  // working fidelity; infeasible working points are omitted.
  std::string csv = "f,k_max,m,s\n";
  for (double f : linspace(cfg.scan_lo, cfg.scan_hi, cfg.steps)) {
    RepeaterConfig rc = to_repeater_config(cfg);
    rc.n_segments = cfg.group;
    rc.working_fidelity = f;
    try {
      const RepeaterReport report = run_nested(rc);
      const LevelReport& level = report.per_level.at(0);
      csv += fmt(f) + "," + std::to_string(level.k_max) + "," +
             fmt(level.pairs_per_loop) + "," + fmt(level.steps_per_loop) + "\n";
    } catch (const InfeasibleLoopError&) {
    } catch (const std::runtime_error&) {
    }
  }
  return csv;
}

std::string csv_repeater(const ExperimentConfig& cfg, std::string* summary) {
  const RepeaterConfig rc = to_repeater_config(cfg);
  const RepeaterReport report = run_nested(rc);
  std::string csv = "level,f_after_connection,f_after_purification,k_max,m,s\n";
  std::vector<int> ks;
  for (const LevelReport& lr : report.per_level) {
    ks.push_back(lr.k_max);
    csv += std::to_string(lr.level) + "," + fmt(lr.fidelity_after_connection) +
           "," + fmt(lr.fidelity_after_purification) + "," +
           std::to_string(lr.k_max) + "," + fmt(lr.pairs_per_loop) + "," +
           fmt(lr.steps_per_loop) + "\n";
  }

  std::string text;
  text += "levels=" + std::to_string(report.per_level.size()) + "\n";
  text += "total_resources=" + fmt(report.total_resources) + "\n";
  text += "physical_per_segment=" + fmt(report.physical_per_segment) + "\n";
  text += "final_fidelity=" + fmt(report.final_state.fidelity()) + "\n";
  text += "final_state=" + fmt(report.final_state.a) + "," +
          fmt(report.final_state.b) + "," + fmt(report.final_state.c) + "," +
          fmt(report.final_state.d) + "\n";
  if (cfg.scheme == Scheme::C) {
    const TimeReport tr = simulate_time_c(rc, cfg.runs, cfg.seed);
    text += "time_mean=" + fmt(tr.mean_total) + "\n";
    text += "time_std=" + fmt(tr.std_total) + "\n";
    text += "time_analytic=" + fmt(analytic_time_c(rc)) + "\n";
  } else {
    text += "time_total=" + fmt(total_time_ab(rc, ks)) + "\n";
  }
  if (summary != nullptr) {
    *summary = text;
  }
  return csv;
}

std::string csv_table(const ExperimentConfig& cfg, std::string* summary) {
  struct Scale {
    const char* name;
    long segments;
  };
  const Scale scales[] = {{"continental", 128}, {"intercontinental", 1024}};
  std::string csv = "scheme,scale,segments,resources_per_segment,time_seconds\n";
  std::string text;
  for (const Scale& scale : scales) {
    for (Scheme scheme : {Scheme::A, Scheme::B, Scheme::C}) {
      ExperimentConfig e = cfg;
      e.scheme = scheme;
      e.segments = scale.segments;
      const RepeaterConfig rc = to_repeater_config(e);
      const RepeaterReport report = run_nested(rc);
      double seconds = 0.0;
      if (scheme == Scheme::C) {
        seconds = simulate_time_c(rc, cfg.runs, cfg.seed).mean_total;
      } else {
        std::vector<int> ks;
        for (const LevelReport& lr : report.per_level) {
          ks.push_back(lr.k_max);
        }
        seconds = total_time_ab(rc, ks);
      }
      csv += std::string(scheme_name(scheme)) + "," + scale.name + "," +
             std::to_string(scale.segments) + "," +
             fmt(report.physical_per_segment) + "," + fmt(seconds) + "\n";
      char line[160];
      std::snprintf(line, sizeof line, "%-18s %s  resources %-12.6g time %.4g s\n",
                    scale.name, scheme_name(scheme),
                    report.physical_per_segment, seconds);
      text += line;
    }
  }
  if (summary != nullptr) {
    *summary = text;
  }
  return csv;
}

// ---------------------------------------------------------------------------

int dispatch(const ExperimentConfig& cfg) {
  std::string csv;
  std::string summary;
  if (cfg.subcommand == "fixpoints") {
    csv = csv_fixpoints(cfg);
  } else if (cfg.subcommand == "converge") {
    csv = csv_converge(cfg);
  } else if (cfg.subcommand == "shape") {
    csv = csv_shape(cfg);
  } else if (cfg.subcommand == "loop") {
    csv = csv_loop(cfg);
  } else if (cfg.subcommand == "resources") {
    csv = csv_resources(cfg);
  } else if (cfg.subcommand == "repeater") {
    csv = csv_repeater(cfg, &summary);
  } else if (cfg.subcommand == "table") {
    csv = csv_table(cfg, &summary);
  } else {
    throw std::invalid_argument("unknown subcommand: " + cfg.subcommand);
  }

  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output file: " + cfg.out);
  }
  out << csv;
  out.close();
  std::ofstream meta(cfg.out + ".meta", std::ios::binary);
  if (!meta) {
    throw std::invalid_argument("cannot open sidecar file: " + cfg.out + ".meta");
  }
  meta << serialize_config(cfg);
  meta.close();
  if (!summary.empty()) {
    std::cout << summary;
  }
  return 0;
}

}  // namespace

std::string serialize_config(const ExperimentConfig& c) {
  std::string s;
  s += "subcommand=" + c.subcommand + "\n";
  s += std::string("scheme=") + scheme_name(c.scheme) + "\n";
  s += "p1=" + fmt(c.noise.p1) + "\n";
  s += "p2=" + fmt(c.noise.p2) + "\n";
  s += "eta=" + fmt(c.noise.eta) + "\n";
  s += std::string("eta_tied=") + (c.eta_tied ? "1" : "0") + "\n";
  s += "segments=" + std::to_string(c.segments) + "\n";
  s += "group=" + std::to_string(c.group) + "\n";
  s += "working_fidelity=" + fmt(c.working_fidelity) + "\n";
  s += "eps=" + fmt(c.eps) + "\n";
  s += "elementary=" + c.elementary + "\n";
  s += "tau_op=" + fmt(c.timing.tau_op) + "\n";
  s += "tau_class=" + fmt(c.timing.tau_class) + "\n";
  s += "l_segment=" + fmt(c.timing.l_segment) + "\n";
  s += "l0=" + fmt(c.timing.l0) + "\n";
  s += "c=" + fmt(c.timing.c) + "\n";
  s += "runs=" + std::to_string(c.runs) + "\n";
  s += "seed=" + std::to_string(c.seed) + "\n";
  s += "scan_lo=" + fmt(c.scan_lo) + "\n";
  s += "scan_hi=" + fmt(c.scan_hi) + "\n";
  s += "steps=" + std::to_string(c.steps) + "\n";
  s += "f0=" + fmt(c.f0) + "\n";
  s += "out=" + c.out + "\n";
  return s;
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig c;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') {
      continue;
    }
    const auto pos = line.find('=');
    if (pos == std::string::npos) {
      throw std::invalid_argument("config line has no '=': " + line);
    }
    const std::string key = line.substr(0, pos);
    const std::string value = line.substr(pos + 1);
    try {
      if (key == "subcommand") c.subcommand = value;
      else if (key == "scheme") c.scheme = parse_scheme(value);
      else if (key == "p1") c.noise.p1 = std::stod(value);
      else if (key == "p2") c.noise.p2 = std::stod(value);
      else if (key == "eta") c.noise.eta = std::stod(value);
      else if (key == "eta_tied") c.eta_tied = value == "1";
      else if (key == "segments") c.segments = std::stol(value);
      else if (key == "group") c.group = std::stoi(value);
      else if (key == "working_fidelity") c.working_fidelity = std::stod(value);
      else if (key == "eps") c.eps = std::stod(value);
      else if (key == "elementary") c.elementary = value;
      else if (key == "tau_op") c.timing.tau_op = std::stod(value);
      else if (key == "tau_class") c.timing.tau_class = std::stod(value);
      else if (key == "l_segment") c.timing.l_segment = std::stod(value);
      else if (key == "l0") c.timing.l0 = std::stod(value);
      else if (key == "c") c.timing.c = std::stod(value);
      else if (key == "runs") c.runs = std::stoi(value);
      else if (key == "seed") c.seed = std::stoull(value);
      else if (key == "scan_lo") c.scan_lo = std::stod(value);
      else if (key == "scan_hi") c.scan_hi = std::stod(value);
      else if (key == "steps") c.steps = std::stoi(value);
      else if (key == "f0") c.f0 = std::stod(value);
      else if (key == "out") c.out = value;
      else throw std::invalid_argument("unknown config key: " + key);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad config value for " + key + ": " + value);
    }
  }
  return c;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot read config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

int run_experiment(std::span<const std::string> args) {
  CLI::App app{"quantum repeater simulation toolbox"};
  app.require_subcommand(1);

  struct Raw {
    std::string scheme = "B";
    std::string eta = "1";
    double errors = -1.0;
    double p1 = -1.0, p2 = -1.0;
    std::string range;
    long segments = -1;
    long levels = -1;
    int group = 2;
    double working = 0.96;
    double eps = 1.0;
    std::string elementary = "default";
    double tau_op = 1e-5, l_segment = 10.0, l0 = 10.0, c = 3e5;
    int runs = 300;
    std::uint64_t seed = 1;
    int steps = -1;
    double f0 = 0.7;
    std::string out;
    std::string config_path;
  } raw;

  struct SubSpec {
    CLI::App* app;
    const char* range_flag;
    double range_lo, range_hi;
    int default_steps;
  };
  std::vector<SubSpec> specs;

  auto add_common = [&](CLI::App* sub, bool with_eps) {
    sub->add_option("--scheme", raw.scheme, "purification scheme: A, B or C");
    sub->add_option("--p1", raw.p1, "one-qubit gate reliability");
    sub->add_option("--p2", raw.p2, "two-qubit gate reliability");
    sub->add_option("--eta", raw.eta, "measurement quality (fixpoints also accepts 'tied')");
    sub->add_option("--errors", raw.errors, "sets p1=p2=eta=1-errors");
    sub->add_option("--segments", raw.segments, "number of chain segments N");
    sub->add_option("--levels", raw.levels, "nesting levels n (alternative to --segments)");
    sub->add_option("--group", raw.group, "pairs connected per loop L");
    sub->add_option("--working-fidelity", raw.working, "working fidelity");
    if (with_eps) {
      sub->add_option("--eps", raw.eps, "elementary-pair shape parameter");
    }
    sub->add_option("--elementary", raw.elementary,
                    "elementary shape policy: default|werner|epsilon|steady");
    sub->add_option("--tau-op", raw.tau_op, "seconds per local operation");
    sub->add_option("--l-segment", raw.l_segment, "segment length, km");
    sub->add_option("--l0", raw.l0, "fiber half length, km");
    sub->add_option("--c", raw.c, "classical signal speed, km/s");
    sub->add_option("--runs", raw.runs, "Monte Carlo runs");
    sub->add_option("--seed", raw.seed, "root random seed");
    sub->add_option("--steps", raw.steps, "scan points / iteration steps");
    sub->add_option("--f0", raw.f0, "starting fidelity");
    sub->add_option("--out", raw.out, "output CSV path");
    sub->add_option("--config", raw.config_path, "load a config file first");
  };

  auto add_sub = [&](const char* name, const char* help, const char* range_flag,
                     double lo, double hi, int steps) {
    CLI::App* sub = app.add_subcommand(name, help);
    const bool scans_eps =
        range_flag != nullptr && std::string(range_flag) == "--eps";
    add_common(sub, !scans_eps);
    if (range_flag != nullptr) {
      sub->add_option(range_flag, raw.range, "scan range lo..hi");
    }
    specs.push_back(SubSpec{sub, range_flag, lo, hi, steps});
    return sub;
  };

  add_sub("fixpoints", "purification interval vs gate reliability", "--p", 0.95,
          1.0, 50);
  add_sub("converge", "fidelity vs purification step for schemes A and B",
          nullptr, 0, 0, 30);
  add_sub("shape", "scheme C fixpoint vs elementary shape parameter", "--eps",
          0.0, 1.0, 50);
  add_sub("loop", "connect-and-repurify feasibility vs working fidelity", "--f",
          0.5, 0.99, 50);
  add_sub("resources", "pairs consumed per loop vs working fidelity", "--f",
          0.9, 0.99, 50);
  add_sub("repeater", "full nested protocol run", nullptr, 0, 0, 0);
  add_sub("table", "scheme comparison at continental/intercontinental scale",
          nullptr, 0, 0, 0);
  CLI::App* replay = app.add_subcommand("replay", "re-run from a metadata sidecar");
  std::string replay_config;
  std::string replay_out;
  replay->add_option("--config", replay_config, "sidecar/config file")->required();
  replay->add_option("--out", replay_out, "override output CSV path");

  std::vector<const char*> argv;
  argv.push_back("repeaterlab");
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    ExperimentConfig cfg;

    if (replay->parsed()) {
      cfg = load_config_file(replay_config);
      if (!replay_out.empty()) {
        cfg.out = replay_out;
      }
    } else {
      const SubSpec* spec = nullptr;
      for (const SubSpec& s : specs) {
        if (s.app->parsed()) {
          spec = &s;
          break;
        }
      }
      if (spec == nullptr) {
        throw std::invalid_argument("no subcommand given");
      }
      CLI::App* sub = spec->app;
      const bool from_file = sub->count("--config") > 0;
      if (from_file) {
        cfg = load_config_file(raw.config_path);
      }
      cfg.subcommand = sub->get_name();

      if (sub->count("--scheme")) cfg.scheme = parse_scheme(raw.scheme);
      if (sub->count("--errors")) cfg.noise = NoiseParams::from_error_rate(raw.errors);
      if (sub->count("--p1")) cfg.noise.p1 = raw.p1;
      if (sub->count("--p2")) cfg.noise.p2 = raw.p2;
      if (sub->count("--eta")) {
        if (raw.eta == "tied") {
          cfg.eta_tied = true;
        } else {
          cfg.eta_tied = false;
          cfg.noise.eta = std::stod(raw.eta);
        }
      }
      if (sub->count("--group")) cfg.group = raw.group;
      if (sub->count("--segments")) cfg.segments = raw.segments;
      if (sub->count("--levels")) {
        long n = 1;
        for (long i = 0; i < raw.levels; ++i) {
          n *= cfg.group;
        }
        if (sub->count("--segments") && cfg.segments != n) {
          throw std::invalid_argument("--segments and --levels disagree");
        }
        cfg.segments = n;
      }
      if (sub->count("--working-fidelity")) cfg.working_fidelity = raw.working;
      if (sub->get_option_no_throw("--eps") != nullptr && sub->count("--eps")) {
        cfg.eps = raw.eps;
      }
      if (sub->count("--elementary")) cfg.elementary = raw.elementary;
      const bool timing_flag = sub->count("--tau-op") || sub->count("--l-segment") ||
                               sub->count("--l0") || sub->count("--c");
      if (timing_flag || !from_file) {
        // Any timing flag re-derives tau_class from the segment geometry.
        const double tau_op =
            sub->count("--tau-op") || !from_file ? raw.tau_op : cfg.timing.tau_op;
        const double l_segment = sub->count("--l-segment") || !from_file
                                     ? raw.l_segment
                                     : cfg.timing.l_segment;
        const double l0 = sub->count("--l0") || !from_file ? raw.l0 : cfg.timing.l0;
        const double c = sub->count("--c") || !from_file ? raw.c : cfg.timing.c;
        cfg.timing = TimingParams::derived(tau_op, l_segment, l0, c);
      }
      if (sub->count("--runs")) cfg.runs = raw.runs;
      if (sub->count("--seed")) cfg.seed = raw.seed;
      if (sub->count("--f0")) cfg.f0 = raw.f0;
      if (sub->count("--steps")) {
        cfg.steps = raw.steps;
      } else if (!from_file) {
        cfg.steps = spec->default_steps;
      }
      if (spec->range_flag != nullptr) {
        if (sub->count(spec->range_flag)) {
          const auto pos = raw.range.find("..");
          if (pos == std::string::npos) {
            throw std::invalid_argument("range must look like lo..hi");
          }
          cfg.scan_lo = std::stod(raw.range.substr(0, pos));
          cfg.scan_hi = std::stod(raw.range.substr(pos + 2));
        } else if (!from_file) {
          cfg.scan_lo = spec->range_lo;
          cfg.scan_hi = spec->range_hi;
        }
      }
      if (sub->count("--out")) {
        cfg.out = raw.out;
      } else if (!from_file) {
        cfg.out = cfg.subcommand + ".csv";
      }
    }

    if (const char* env = std::getenv("REPEATERLAB_SEED")) {
      try {
        cfg.seed = std::stoull(env);
      } catch (const std::logic_error&) {
        throw std::invalid_argument("REPEATERLAB_SEED is not an integer");
      }
    }
    cfg.noise.validate();
    return dispatch(cfg);
  } catch (const InfeasibleLoopError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace repeaterlab
