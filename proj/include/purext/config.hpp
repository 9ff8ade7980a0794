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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "purext/model.hpp"
#include "purext/perturbation.hpp"
#include "purext/sweep.hpp"

namespace purext {

enum class Command { point, sweep, diff, perturb, oracle_check, trajectories };
enum class OutputFormat { csv, ppm, both };

/// Fully validated run description. Model inputs default to units of
/// epsilon (omega/eps, eta/eps, eps*tau), matching the sweep axes; raw-unit
/// mode accepts bare energies and times and is the only mode that allows
/// epsilon = 0.
struct RunConfig {
  Command command = Command::point;
  bool raw_units = false;

  // eps-unit inputs
  double omega_over_eps = 2.0;
  double eta_over_eps = 0.0;
  double eps_tau = 2.0;
  // raw-unit inputs
  double omega = 2.0;
  double eps = 1.0;
  double eta = 0.0;
  double tau = 2.0;

  double phi_eta_over_pi = 0.0;
  double phi_x_over_pi = 0.0;
  double theta_over_pi = 0.25;

  AxisSpec grid_eps_tau{0.05, 12.0, 240};
  AxisSpec grid_theta{0.01, 0.99, 196};

  double baseline_eta = 0.0; ///< same units as the main eta input
  double baseline_phi_eta_over_pi = 0.0;
  std::string baseline_csv;

  Regime regime = Regime::weak;
  double small_param = 1e-3;

  int steps = 10;
  std::int64_t trials = 100000;
  std::uint64_t seed = 12345;
  int samples = 100;
  std::string psi0 = "uu"; ///< uu|ud|du|dd|bell

  std::string out = "purext_out.csv";
  OutputFormat format = OutputFormat::csv;

  ModelParams model_params() const;
  ModelParams baseline_model_params() const;
  AncillaState ancilla() const;
  GridSpec grid_spec() const;
  GridSpec baseline_grid_spec() const;
  double point_tau() const; ///< bare time for the point command

  /// Canonical metadata block: artifact version, reconstructed command
  /// line, parameter values and (for stochastic commands) the seed.
  /// Derived from the parsed config only, so identical configs produce
  /// identical bytes no matter how they were specified.
  std::vector<std::string> metadata_lines() const;
};

/// Parses argv plus an optional `--config file` of line-oriented
/// `key = value` pairs ('#' starts a comment). Flags override file values;
/// unknown keys are errors. Throws UsageError with the offending key and
/// the accepted range.
RunConfig parse_config(int argc, const char* const* argv);

const char* command_name(Command c);
std::string usage_text();

} // namespace purext
