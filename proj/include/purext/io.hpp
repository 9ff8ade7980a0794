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

#include <string>
#include <vector>

#include "purext/sweep.hpp"

namespace purext {

/// Byte-exact emitters. Numbers are printed with 12 significant digits,
/// rows ascend in eps*tau then theta, lines end in LF, and every artifact
/// starts with a '#'-prefixed metadata block. Identical inputs produce
/// identical bytes.

enum class Quantity { upsilon, lambda_eff, sigma };

const char* quantity_name(Quantity q);

/// 12-significant-digit representation used by every emitter.
std::string fmt12(double v);

void write_grid_csv(const SweepGrid& grid, const std::vector<std::string>& meta,
                    const std::string& path);

/// Grid columns (the perturbed grid's values and OR-combined flags) plus
/// signed differences and their threshold classes.
void write_diff_csv(const SweepGrid& grid, const DiffMap& diff,
                    const std::vector<std::string>& meta, const std::string& path);

void write_point_csv(double eps_tau, double theta_over_pi, const WitnessTriple& w,
                     bool defective, const std::vector<std::string>& meta,
                     const std::string& path);

/// Binary PPM (P6), width = tau count, height = theta count, top row is the
/// largest theta. Witness value v maps to RGB (255(1-v), 255(1-v), 255-116v):
/// white at 0, dark blue at 1.
void write_grid_ppm(const SweepGrid& grid, Quantity q,
                    const std::vector<std::string>& meta, const std::string& path);

/// Diff classes map to white / light blue / dark blue (increase) and
/// light red / dark red (decrease).
void write_diff_ppm(const DiffMap& diff, Quantity q, const std::vector<std::string>& meta,
                    const std::string& path);

/// Reads a grid CSV produced by write_grid_csv (used for diff baselines).
SweepGrid load_grid_csv(const std::string& path);

} // namespace purext
