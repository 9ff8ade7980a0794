// Copyright 2026 purext contributors
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

#include "purext/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>

#include "purext/errors.hpp"
#include "purext/io.hpp"

namespace purext {

namespace {

std::string trim(const std::string& s) {
  const std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v))
    throw UsageError(key + ": expected a finite number, got '" + value + "'");
  return v;
}

long long parse_int(const std::string& key, const std::string& value) {
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0' || errno == ERANGE)
    throw UsageError(key + ": expected an integer, got '" + value + "'");
  return v;
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0' || errno == ERANGE ||
      value.find('-') != std::string::npos)
    throw UsageError(key + ": expected a non-negative integer, got '" + value + "'");
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw UsageError(key + ": expected true/false, got '" + value + "'");
}

Command parse_command(const std::string& value) {
  if (value == "point") return Command::point;
  if (value == "sweep") return Command::sweep;
  if (value == "diff") return Command::diff;
  if (value == "perturb") return Command::perturb;
  if (value == "oracle-check") return Command::oracle_check;
  if (value == "trajectories") return Command::trajectories;
  throw UsageError("command: expected one of point|sweep|diff|perturb|oracle-check|"
                   "trajectories, got '" +
                   value + "'");
}

struct Tracking {
  bool any_eps_unit_key = false;
  bool any_raw_unit_key = false;
};

void apply_key(RunConfig& cfg, Tracking& track, const std::string& key,
               const std::string& value) {
  auto in_open01 = [&](double v) {
    if (!(v > 0.0 && v < 1.0))
      throw UsageError(key + ": accepted range (0, 1), got " + value);
    return v;
  };
  auto positive = [&](double v) {
    if (!(v > 0.0)) throw UsageError(key + ": must be > 0, got " + value);
    return v;
  };
  auto non_negative = [&](double v) {
    if (v < 0.0) throw UsageError(key + ": must be >= 0, got " + value);
    return v;
  };

  if (key == "command") {
    cfg.command = parse_command(value);
  } else if (key == "raw-units") {
    cfg.raw_units = parse_bool(key, value);
  } else if (key == "omega-over-eps") {
    cfg.omega_over_eps = parse_double(key, value);
    track.any_eps_unit_key = true;
  } else if (key == "eta-over-eps") {
    cfg.eta_over_eps = non_negative(parse_double(key, value));
    track.any_eps_unit_key = true;
  } else if (key == "eps-tau") {
    cfg.eps_tau = positive(parse_double(key, value));
    track.any_eps_unit_key = true;
  } else if (key == "omega") {
    cfg.omega = parse_double(key, value);
    track.any_raw_unit_key = true;
  } else if (key == "eps") {
    cfg.eps = non_negative(parse_double(key, value));
    track.any_raw_unit_key = true;
  } else if (key == "eta") {
    cfg.eta = non_negative(parse_double(key, value));
    track.any_raw_unit_key = true;
  } else if (key == "tau") {
    cfg.tau = positive(parse_double(key, value));
    track.any_raw_unit_key = true;
  } else if (key == "phi-eta-over-pi") {
    cfg.phi_eta_over_pi = parse_double(key, value);
  } else if (key == "phi-x-over-pi") {
    cfg.phi_x_over_pi = parse_double(key, value);
  } else if (key == "theta-over-pi") {
    cfg.theta_over_pi = in_open01(parse_double(key, value));
  } else if (key == "eps-tau-min") {
    cfg.grid_eps_tau.min = positive(parse_double(key, value));
  } else if (key == "eps-tau-max") {
    cfg.grid_eps_tau.max = positive(parse_double(key, value));
  } else if (key == "eps-tau-count") {
    const long long v = parse_int(key, value);
    if (v < 2 || v > 100000) throw UsageError(key + ": accepted range [2, 100000]");
    cfg.grid_eps_tau.count = static_cast<int>(v);
  } else if (key == "theta-over-pi-min") {
    cfg.grid_theta.min = in_open01(parse_double(key, value));
  } else if (key == "theta-over-pi-max") {
    cfg.grid_theta.max = in_open01(parse_double(key, value));
  } else if (key == "theta-over-pi-count") {
    const long long v = parse_int(key, value);
    if (v < 2 || v > 100000) throw UsageError(key + ": accepted range [2, 100000]");
    cfg.grid_theta.count = static_cast<int>(v);
  } else if (key == "baseline-eta-over-eps") {
    cfg.baseline_eta = non_negative(parse_double(key, value));
    track.any_eps_unit_key = true;
  } else if (key == "baseline-eta") {
    cfg.baseline_eta = non_negative(parse_double(key, value));
    track.any_raw_unit_key = true;
  } else if (key == "baseline-phi-eta-over-pi") {
    cfg.baseline_phi_eta_over_pi = parse_double(key, value);
  } else if (key == "baseline-csv") {
    cfg.baseline_csv = value;
  } else if (key == "regime") {
    if (value == "weak")
      cfg.regime = Regime::weak;
    else if (value == "strong")
      cfg.regime = Regime::strong;
    else
      throw UsageError("regime: expected weak|strong, got '" + value + "'");
  } else if (key == "small-param") {
    const double v = parse_double(key, value);
    if (!(v > 0.0 && v <= 0.5))
      throw UsageError(key + ": accepted range (0, 0.5], got " + value);
    cfg.small_param = v;
  } else if (key == "steps") {
    const long long v = parse_int(key, value);
    if (v < 1 || v > 1000000) throw UsageError(key + ": accepted range [1, 1000000]");
    cfg.steps = static_cast<int>(v);
  } else if (key == "trials") {
    const long long v = parse_int(key, value);
    if (v < 1 || v > 1000000000LL)
      throw UsageError(key + ": accepted range [1, 1000000000]");
    cfg.trials = v;
  } else if (key == "seed") {
    cfg.seed = parse_uint(key, value);
  } else if (key == "samples") {
    const long long v = parse_int(key, value);
    if (v < 1 || v > 100000) throw UsageError(key + ": accepted range [1, 100000]");
    cfg.samples = static_cast<int>(v);
  } else if (key == "psi0") {
    if (value != "uu" && value != "ud" && value != "du" && value != "dd" &&
        value != "bell")
      throw UsageError("psi0: expected uu|ud|du|dd|bell, got '" + value + "'");
    cfg.psi0 = value;
  } else if (key == "out") {
    if (value.empty()) throw UsageError("out: path must not be empty");
    cfg.out = value;
  } else if (key == "format") {
    if (value == "csv")
      cfg.format = OutputFormat::csv;
    else if (value == "ppm")
      cfg.format = OutputFormat::ppm;
    else if (value == "both")
      cfg.format = OutputFormat::both;
    else
      throw UsageError("format: expected csv|ppm|both, got '" + value + "'");
  } else {
    throw UsageError("unknown key: " + key);
  }
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("config: cannot open '" + path + "'");
  std::vector<std::pair<std::string, std::string>> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config: line " + std::to_string(lineno) +
                       " is not 'key = value': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw UsageError("config: empty key at line " + std::to_string(lineno));
    kv.emplace_back(key, value);
  }
  return kv;
}

} // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::point: return "point";
    case Command::sweep: return "sweep";
    case Command::diff: return "diff";
    case Command::perturb: return "perturb";
    case Command::oracle_check: return "oracle-check";
    case Command::trajectories: return "trajectories";
  }
  return "point";
}

std::string usage_text() {
  return "usage: purext <command> [--key value ...] [--config file]\n"
         "commands: point | sweep | diff | perturb | oracle-check | trajectories\n"
         "model (units of eps): --omega-over-eps --eta-over-eps --phi-eta-over-pi\n"
         "                      --theta-over-pi --phi-x-over-pi --eps-tau\n"
         "raw units:            --raw-units --omega --eps --eta --tau\n"
         "grid:  --eps-tau-min/--eps-tau-max/--eps-tau-count\n"
         "       --theta-over-pi-min/--theta-over-pi-max/--theta-over-pi-count\n"
         "diff:  --baseline-eta-over-eps (or --baseline-eta) --baseline-phi-eta-over-pi\n"
         "       --baseline-csv FILE\n"
         "perturb: --regime weak|strong --small-param X\n"
         "oracle-check: --samples N --seed S\n"
         "trajectories: --steps N --trials T --seed S --psi0 uu|ud|du|dd|bell\n"
         "output: --out PATH --format csv|ppm|both\n"
         "config file: line-oriented 'key = value', '#' comments; flags override\n"
         "workers: set PUREXT_THREADS (default: available parallelism)\n";
}

RunConfig parse_config(int argc, const char* const* argv) {
  std::vector<std::pair<std::string, std::string>> flags;
  std::string command_arg;
  std::string config_path;

  int i = 1;
  if (i < argc && argv[i][0] != '-') command_arg = argv[i++];
  for (; i < argc; ++i) {
    std::string tok = argv[i];
    if (tok.rfind("--", 0) != 0)
      throw UsageError("expected --key, got '" + tok + "'\n" + usage_text());
    tok = tok.substr(2);
    std::string key = tok, value;
    const std::size_t eq = tok.find('=');
    if (eq != std::string::npos) {
      key = tok.substr(0, eq);
      value = tok.substr(eq + 1);
    } else if (key == "raw-units") {
      value = "true"; // boolean flag form
    } else {
      if (i + 1 >= argc) throw UsageError("--" + key + ": missing value");
      value = argv[++i];
    }
    if (key == "config")
      config_path = value;
    else
      flags.emplace_back(key, value);
  }

  RunConfig cfg;
  Tracking track;
  if (!config_path.empty())
    for (const auto& [k, v] : read_config_file(config_path)) apply_key(cfg, track, k, v);
  if (!command_arg.empty()) cfg.command = parse_command(command_arg);
  for (const auto& [k, v] : flags) apply_key(cfg, track, k, v);
  if (command_arg.empty() && config_path.empty() && flags.empty())
    throw UsageError(usage_text());

  if (cfg.raw_units && track.any_eps_unit_key)
    throw UsageError("raw-units mode uses --omega/--eps/--eta/--tau/--baseline-eta, "
                     "not the *-over-eps keys");
  if (!cfg.raw_units && track.any_raw_unit_key)
    throw UsageError("--omega/--eps/--eta/--tau/--baseline-eta require --raw-units");

  if (!(cfg.grid_eps_tau.min < cfg.grid_eps_tau.max))
    throw UsageError("eps-tau-min must be < eps-tau-max");
  if (!(cfg.grid_theta.min < cfg.grid_theta.max))
    throw UsageError("theta-over-pi-min must be < theta-over-pi-max");
  return cfg;
}

ModelParams RunConfig::model_params() const {
  if (raw_units) return {omega, eps, eta, phi_eta_over_pi};
  return {omega_over_eps, 1.0, eta_over_eps, phi_eta_over_pi};
}

ModelParams RunConfig::baseline_model_params() const {
  ModelParams p = model_params();
  p.eta = baseline_eta;
  p.phi_eta_over_pi = baseline_phi_eta_over_pi;
  return p;
}

AncillaState RunConfig::ancilla() const { return {theta_over_pi, phi_x_over_pi}; }

GridSpec RunConfig::grid_spec() const {
  GridSpec spec;
  spec.eps_tau = grid_eps_tau;
  spec.theta_over_pi = grid_theta;
  spec.params = model_params();
  spec.phi_x_over_pi = phi_x_over_pi;
  return spec;
}

GridSpec RunConfig::baseline_grid_spec() const {
  GridSpec spec = grid_spec();
  spec.params = baseline_model_params();
  return spec;
}

double RunConfig::point_tau() const { return raw_units ? tau : eps_tau; }

std::vector<std::string> RunConfig::metadata_lines() const {
  std::vector<std::string> lines;
  lines.push_back(std::string("purext ") + kVersion);

  std::string cmd = std::string("command: ") + command_name(command);
  const ModelParams p = model_params();
  if (raw_units) {
    cmd += " --raw-units --omega " + fmt12(omega) + " --eps " + fmt12(eps) + " --eta " +
           fmt12(eta);
  } else {
    cmd += " --omega-over-eps " + fmt12(omega_over_eps) + " --eta-over-eps " +
           fmt12(eta_over_eps);
  }
  cmd += " --phi-eta-over-pi " + fmt12(phi_eta_over_pi) + " --phi-x-over-pi " +
         fmt12(phi_x_over_pi);
  switch (command) {
    case Command::point:
      cmd += " --theta-over-pi " + fmt12(theta_over_pi);
      cmd += raw_units ? " --tau " + fmt12(tau) : " --eps-tau " + fmt12(eps_tau);
      break;
    case Command::sweep:
    case Command::diff:
      cmd += " --eps-tau-min " + fmt12(grid_eps_tau.min) + " --eps-tau-max " +
             fmt12(grid_eps_tau.max) + " --eps-tau-count " +
             std::to_string(grid_eps_tau.count);
      cmd += " --theta-over-pi-min " + fmt12(grid_theta.min) + " --theta-over-pi-max " +
             fmt12(grid_theta.max) + " --theta-over-pi-count " +
             std::to_string(grid_theta.count);
      if (command == Command::diff) {
        if (!baseline_csv.empty()) {
          cmd += " --baseline-csv " + baseline_csv;
        } else {
          cmd += (raw_units ? " --baseline-eta " : " --baseline-eta-over-eps ") +
                 fmt12(baseline_eta);
          cmd += " --baseline-phi-eta-over-pi " + fmt12(baseline_phi_eta_over_pi);
        }
      }
      break;
    case Command::perturb:
      cmd += std::string(" --regime ") + (regime == Regime::weak ? "weak" : "strong");
      cmd += " --small-param " + fmt12(small_param);
      break;
    case Command::oracle_check:
      cmd += " --samples " + std::to_string(samples) + " --seed " + std::to_string(seed);
      break;
    case Command::trajectories:
      cmd += " --theta-over-pi " + fmt12(theta_over_pi);
      cmd += raw_units ? " --tau " + fmt12(tau) : " --eps-tau " + fmt12(eps_tau);
      cmd += " --steps " + std::to_string(steps) + " --trials " + std::to_string(trials) +
             " --seed " + std::to_string(seed) + " --psi0 " + psi0;
      break;
  }
  lines.push_back(cmd);

  lines.push_back("model: omega=" + fmt12(p.omega) + " epsilon=" + fmt12(p.epsilon) +
                  " eta=" + fmt12(p.eta) + " phi_eta_over_pi=" + fmt12(p.phi_eta_over_pi) +
                  " phi_x_over_pi=" + fmt12(phi_x_over_pi) +
                  (raw_units ? " units=raw" : " units=eps"));
  if (command == Command::oracle_check || command == Command::trajectories)
    lines.push_back("seed: " + std::to_string(seed));
  return lines;
}

} // namespace purext
