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

#include <algorithm>
#include <cmath>

#include "purext/errors.hpp"
#include "purext/linalg.hpp"
#include "purext/parallel.hpp"

namespace purext {

void GridSpec::validate() const {
  if (eps_tau.count < 2 || theta_over_pi.count < 2)
    throw Error("GridSpec: axis counts must be at least 2");
  if (!(eps_tau.min > 0.0) || !(eps_tau.min < eps_tau.max))
    throw Error("GridSpec: time axis requires 0 < min < max");
  if (!(theta_over_pi.min > 0.0) || !(theta_over_pi.min < theta_over_pi.max) ||
      !(theta_over_pi.max < 1.0))
    throw Error("GridSpec: theta/pi axis must lie inside (0, 1)");
}

bool GridSpec::same_axes(const GridSpec& other) const {
  // Tolerant at the CSV print precision, so a baseline loaded from disk
  // still matches the grid it was computed on.
  auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
  };
  return eps_tau.count == other.eps_tau.count &&
         theta_over_pi.count == other.theta_over_pi.count &&
         close(eps_tau.min, other.eps_tau.min) && close(eps_tau.max, other.eps_tau.max) &&
         close(theta_over_pi.min, other.theta_over_pi.min) &&
         close(theta_over_pi.max, other.theta_over_pi.max);
}

SweepGrid run_sweep(const GridSpec& spec, int workers) {
  spec.validate();
  const int nt = spec.eps_tau.count;
  const int nh = spec.theta_over_pi.count;

  SweepGrid grid;
  grid.spec = spec;
  grid.cells.resize(static_cast<std::size_t>(nt) * static_cast<std::size_t>(nh));

  // tau axis carries eps*tau; with eps > 0 the bare time is (eps*tau)/eps,
  // and raw-unit runs (eps possibly 0) pass the bare tau directly.
  const double time_scale = spec.params.epsilon > 0.0 ? 1.0 / spec.params.epsilon : 1.0;

  const HermitianEig he = hermitian_eig(build_hamiltonian(spec.params));
  std::vector<ComplexVector> chis(static_cast<std::size_t>(nh));
  for (int j = 0; j < nh; ++j)
    chis[static_cast<std::size_t>(j)] =
        ancilla_vector({spec.theta_over_pi.at(j), spec.phi_x_over_pi});

  parallel_for(nt, workers, [&](std::int64_t ti) {
    const double tau = spec.eps_tau.at(static_cast<int>(ti)) * time_scale;
    const int n = 8;
    ComplexMatrix u(n);
    {
      std::vector<Complex> ph(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k)
        ph[static_cast<std::size_t>(k)] =
            std::polar(1.0, -he.evals[static_cast<std::size_t>(k)] * tau);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          Complex s = 0.0;
          for (int k = 0; k < n; ++k)
            s += he.vecs(r, k) * ph[static_cast<std::size_t>(k)] *
                 std::conj(he.vecs(c, k));
          u(r, c) = s;
        }
    }
    for (int j = 0; j < nh; ++j) {
      SweepCell cell;
      try {
        const ComplexMatrix v = effective_from_propagator(u, chis[static_cast<std::size_t>(j)]);
        const SpectralData sd = spectral_decompose(v);
        cell.w = witnesses(sd);
        cell.degenerate = sd.degenerate_top;
        cell.defective = sd.defective;
      } catch (const Error&) {
        cell.defective = true;
      }
      grid.cells[static_cast<std::size_t>(ti) * static_cast<std::size_t>(nh) +
                 static_cast<std::size_t>(j)] = cell;
    }
  });
  return grid;
}

DiffClass classify_diff(double d) {
  const double a = std::abs(d);
  if (a < tol::diff_none) return DiffClass::none;
  if (a < tol::diff_large)
    return d > 0.0 ? DiffClass::moderate_increase : DiffClass::moderate_decrease;
  return d > 0.0 ? DiffClass::large_increase : DiffClass::large_decrease;
}

const char* diff_class_name(DiffClass c) {
  switch (c) {
    case DiffClass::none: return "none";
    case DiffClass::moderate_increase: return "moderate_increase";
    case DiffClass::moderate_decrease: return "moderate_decrease";
    case DiffClass::large_increase: return "large_increase";
    case DiffClass::large_decrease: return "large_decrease";
  }
  return "none";
}

DiffMap diff_map(const SweepGrid& grid, const SweepGrid& baseline) {
  if (!grid.spec.same_axes(baseline.spec))
    throw SpecMismatch("diff_map: grids have different axes");

  DiffMap out;
  out.spec = grid.spec;
  out.cells.resize(grid.cells.size());
  for (std::size_t i = 0; i < grid.cells.size(); ++i) {
    const SweepCell& g = grid.cells[i];
    const SweepCell& b = baseline.cells[i];
    DiffCell d;
    d.d_upsilon = g.w.upsilon - b.w.upsilon;
    d.d_lambda = g.w.lambda_eff - b.w.lambda_eff;
    d.d_sigma = g.w.sigma - b.w.sigma;
    d.c_upsilon = classify_diff(d.d_upsilon);
    d.c_lambda = classify_diff(d.d_lambda);
    d.c_sigma = classify_diff(d.d_sigma);
    d.degenerate = g.degenerate || b.degenerate;
    d.defective = g.defective || b.defective;
    out.cells[i] = d;
  }
  return out;
}

std::vector<OptimalPoint> find_optimal_points(const SweepGrid& grid, double min_upsilon,
                                              double min_sigma) {
  std::vector<OptimalPoint> out;
  const int nh = grid.spec.theta_over_pi.count;
  for (int ti = 0; ti < grid.spec.eps_tau.count; ++ti) {
    for (int j = 0; j < nh; ++j) {
      const SweepCell& c = grid.cell(ti, j);
      if (c.degenerate) continue;
      if (c.w.upsilon >= min_upsilon && c.w.sigma >= min_sigma)
        out.push_back({grid.spec.eps_tau.at(ti), grid.spec.theta_over_pi.at(j), c.w});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const OptimalPoint& a, const OptimalPoint& b) {
    return a.w.lambda_eff > b.w.lambda_eff;
  });
  return out;
}

double efficiency_collapse_fraction(const SweepGrid& grid, double cutoff) {
  if (grid.cells.empty()) return 0.0;
  std::size_t hits = 0;
  for (const SweepCell& c : grid.cells)
    if (c.w.lambda_eff < cutoff) ++hits;
  return static_cast<double>(hits) / static_cast<double>(grid.cells.size());
}

} // namespace purext
