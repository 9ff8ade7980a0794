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

#include <vector>

#include "purext/analysis.hpp"
#include "purext/model.hpp"

namespace purext {

/// Inclusive linearly spaced axis.
struct AxisSpec {
  double min = 0.0;
  double max = 0.0;
  int count = 0;

  double at(int i) const {
    if (count == 1) return min;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
};

/// A witness-field sweep over (eps*tau, theta/pi) at fixed model parameters
/// and ancilla phase. In raw-unit runs the first axis carries the bare tau.
struct GridSpec {
  AxisSpec eps_tau{0.05, 12.0, 240};        ///< min > 0
  AxisSpec theta_over_pi{0.01, 0.99, 196};  ///< inside (0, 1)
  ModelParams params;                       ///< epsilon = 1 in eps-unit runs
  double phi_x_over_pi = 0.0;

  void validate() const; ///< throws Error on a malformed spec
  bool same_axes(const GridSpec& other) const;
};

struct SweepCell {
  WitnessTriple w;
  bool degenerate = false;
  bool defective = false;
};

struct SweepGrid {
  GridSpec spec;
  std::vector<SweepCell> cells; ///< row-major: tau index major, theta index minor

  const SweepCell& cell(int tau_idx, int theta_idx) const {
    return cells[static_cast<std::size_t>(tau_idx) *
                     static_cast<std::size_t>(spec.theta_over_pi.count) +
                 static_cast<std::size_t>(theta_idx)];
  }
};

/// Evaluates every cell: one Hamiltonian eigendecomposition per sweep, one
/// propagator per tau column, then projection + spectral decomposition per
/// cell. Cells are independent; the output is identical for any worker
/// count. Per-cell numerical failures are recorded in the flags and never
/// abort the sweep.
SweepGrid run_sweep(const GridSpec& spec, int workers = 1);

enum class DiffClass {
  none,              ///< |d| < 0.01
  moderate_increase, ///< 0.01 <= d < 0.1
  moderate_decrease,
  large_increase,    ///< d >= 0.1
  large_decrease,
};

DiffClass classify_diff(double d);
const char* diff_class_name(DiffClass c);

struct DiffCell {
  double d_upsilon = 0.0;
  double d_lambda = 0.0;
  double d_sigma = 0.0;
  DiffClass c_upsilon = DiffClass::none;
  DiffClass c_lambda = DiffClass::none;
  DiffClass c_sigma = DiffClass::none;
  bool degenerate = false; ///< either side flagged
  bool defective = false;  ///< either side flagged
};

/// Signed per-cell differences (grid - baseline) with threshold classes.
struct DiffMap {
  GridSpec spec; ///< the perturbed grid's spec
  std::vector<DiffCell> cells;

  const DiffCell& cell(int tau_idx, int theta_idx) const {
    return cells[static_cast<std::size_t>(tau_idx) *
                     static_cast<std::size_t>(spec.theta_over_pi.count) +
                 static_cast<std::size_t>(theta_idx)];
  }
};

/// Throws SpecMismatch unless both grids share identical axes.
DiffMap diff_map(const SweepGrid& grid, const SweepGrid& baseline);

struct OptimalPoint {
  double eps_tau = 0.0;
  double theta_over_pi = 0.0;
  WitnessTriple w;
};

/// Non-degenerate cells with upsilon >= min_upsilon and sigma >= min_sigma,
/// sorted by descending efficiency.
std::vector<OptimalPoint> find_optimal_points(const SweepGrid& grid, double min_upsilon,
                                              double min_sigma);

/// Fraction of cells with lambda_eff < cutoff.
double efficiency_collapse_fraction(const SweepGrid& grid, double cutoff);

} // namespace purext
