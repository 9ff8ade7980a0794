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

#include "purext/sweep.hpp"

#include <cmath>

#include "doctest.h"
#include "purext/errors.hpp"
#include "purext/model.hpp"

using namespace purext;

namespace {

GridSpec small_spec(double eta, double phi, int nt = 12, int nh = 10) {
  GridSpec spec;
  spec.eps_tau = {0.3, 6.0, nt};
  spec.theta_over_pi = {0.05, 0.95, nh};
  spec.params = {2.0, 1.0, eta, phi};
  spec.phi_x_over_pi = 0.0;
  return spec;
}

bool cells_identical(const SweepGrid& a, const SweepGrid& b) {
  if (a.cells.size() != b.cells.size()) return false;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    const SweepCell &x = a.cells[i], &y = b.cells[i];
    if (x.w.upsilon != y.w.upsilon || x.w.lambda_eff != y.w.lambda_eff ||
        x.w.sigma != y.w.sigma || x.degenerate != y.degenerate ||
        x.defective != y.defective)
      return false;
  }
  return true;
}

} // namespace

TEST_CASE("run_sweep: toy grid matches independent point evaluations exactly") {
  GridSpec spec = small_spec(0.2, 0.3, 2, 2);
  const SweepGrid grid = run_sweep(spec, 1);
  for (int ti = 0; ti < 2; ++ti) {
    for (int j = 0; j < 2; ++j) {
      const double tau = spec.eps_tau.at(ti); // eps = 1
      const AncillaState a{spec.theta_over_pi.at(j), spec.phi_x_over_pi};
      const WitnessTriple w =
          witnesses(spectral_decompose(effective_operator(spec.params, a, tau)));
      const SweepCell& c = grid.cell(ti, j);
      CHECK(c.w.upsilon == w.upsilon);
      CHECK(c.w.lambda_eff == w.lambda_eff);
      CHECK(c.w.sigma == w.sigma);
    }
  }
}

TEST_CASE("run_sweep: identical output for any worker count") {
  const GridSpec spec = small_spec(0.5, 0.25);
  const SweepGrid g1 = run_sweep(spec, 1);
  const SweepGrid g3 = run_sweep(spec, 3);
  const SweepGrid g8 = run_sweep(spec, 8);
  CHECK(cells_identical(g1, g3));
  CHECK(cells_identical(g1, g8));
}

TEST_CASE("run_sweep: witness ranges and population") {
  const SweepGrid grid = run_sweep(small_spec(0.0, 0.0), 2);
  REQUIRE(grid.cells.size() == 12u * 10u);
  for (const SweepCell& c : grid.cells) {
    CHECK(c.w.upsilon >= 0.0);
    CHECK(c.w.upsilon <= 1.0 + 1e-10);
    CHECK(c.w.lambda_eff >= 0.0);
    CHECK(c.w.lambda_eff <= 1.0 + 1e-10);
    CHECK(c.w.sigma >= 0.0);
    CHECK(c.w.sigma <= 1.0 + 1e-10);
  }
}

TEST_CASE("run_sweep: eps = 0 raw grid has zero efficiency everywhere") {
  GridSpec spec = small_spec(0.0, 0.0);
  spec.params = {1.0, 0.0, 0.7, 0.4}; // raw units: bare tau axis
  const SweepGrid grid = run_sweep(spec, 2);
  for (const SweepCell& c : grid.cells) CHECK(c.w.lambda_eff < 1e-9);
  CHECK(efficiency_collapse_fraction(grid, 0.01) == 1.0);
  CHECK(efficiency_collapse_fraction(grid, 0.5) == 1.0);
}

TEST_CASE("run_sweep: rejects malformed grids") {
  GridSpec spec = small_spec(0.0, 0.0);
  spec.eps_tau.min = -1.0;
  CHECK_THROWS_AS(run_sweep(spec, 1), Error);
  spec = small_spec(0.0, 0.0);
  spec.theta_over_pi.max = 1.0;
  CHECK_THROWS_AS(run_sweep(spec, 1), Error);
  spec = small_spec(0.0, 0.0);
  spec.eps_tau.count = 1;
  CHECK_THROWS_AS(run_sweep(spec, 1), Error);
}

TEST_CASE("classify_diff: closed-below thresholds") {
  CHECK(classify_diff(0.0) == DiffClass::none);
  CHECK(classify_diff(0.00999) == DiffClass::none);
  CHECK(classify_diff(-0.00999) == DiffClass::none);
  CHECK(classify_diff(0.01) == DiffClass::moderate_increase);
  CHECK(classify_diff(-0.01) == DiffClass::moderate_decrease);
  CHECK(classify_diff(0.0999) == DiffClass::moderate_increase);
  CHECK(classify_diff(0.1) == DiffClass::large_increase);
  CHECK(classify_diff(-0.2) == DiffClass::large_decrease);
}

TEST_CASE("diff_map: a grid against itself is exactly zero") {
  const SweepGrid grid = run_sweep(small_spec(0.3, 0.1), 2);
  const DiffMap dm = diff_map(grid, grid);
  for (const DiffCell& c : dm.cells) {
    CHECK(c.d_upsilon == 0.0);
    CHECK(c.d_lambda == 0.0);
    CHECK(c.d_sigma == 0.0);
    CHECK(c.c_upsilon == DiffClass::none);
    CHECK(c.c_lambda == DiffClass::none);
    CHECK(c.c_sigma == DiffClass::none);
  }
}

TEST_CASE("diff_map: classes agree with stored numeric differences") {
  const SweepGrid grid = run_sweep(small_spec(1.5, 0.0), 2);
  const SweepGrid base = run_sweep(small_spec(0.0, 0.0), 2);
  const DiffMap dm = diff_map(grid, base);
  for (const DiffCell& c : dm.cells) {
    CHECK(c.c_upsilon == classify_diff(c.d_upsilon));
    CHECK(c.c_lambda == classify_diff(c.d_lambda));
    CHECK(c.c_sigma == classify_diff(c.d_sigma));
  }
}

TEST_CASE("diff_map: refuses mismatched axes") {
  const SweepGrid a = run_sweep(small_spec(0.0, 0.0, 12, 10), 1);
  const SweepGrid b = run_sweep(small_spec(0.0, 0.0, 12, 11), 1);
  CHECK_THROWS_AS(diff_map(a, b), SpecMismatch);
}

TEST_CASE("find_optimal_points: threshold edge cases") {
  const SweepGrid grid = run_sweep(small_spec(0.0, 0.0), 2);
  std::size_t non_degenerate = 0;
  for (const SweepCell& c : grid.cells)
    if (!c.degenerate) ++non_degenerate;

  CHECK(find_optimal_points(grid, 0.0, 0.0).size() == non_degenerate);
  CHECK(find_optimal_points(grid, 1.01, 0.0).empty());

  const auto pts = find_optimal_points(grid, 0.5, 0.5);
  for (std::size_t i = 1; i < pts.size(); ++i)
    CHECK(pts[i - 1].w.lambda_eff >= pts[i].w.lambda_eff);
}
