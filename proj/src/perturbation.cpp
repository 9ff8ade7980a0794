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

#include "purext/perturbation.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "purext/errors.hpp"
#include "purext/linalg.hpp"

namespace purext {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

ComplexVector unit8(int idx) {
  ComplexVector v(8);
  v[idx] = 1.0;
  return v;
}

ComplexVector pair8(int i, int j, Complex phase_j) {
  ComplexVector v(8);
  v[i] = kInvSqrt2;
  v[j] = phase_j * kInvSqrt2;
  return v;
}

} // namespace

PerturbativeSpectrum weak_spectrum(const ModelParams& p) {
  if (p.epsilon <= 0.0)
    throw InvalidRegime("weak_spectrum: requires epsilon > 0");
  const double w = p.omega, e = p.epsilon;
  const double root2e = e * std::sqrt(2.0);
  const double c = cos_pi(p.phi_eta_over_pi);
  const double half = (p.eta / 2.0) * c;
  const double minus = -(p.eta * c);

  PerturbativeSpectrum s;
  s.regime = Regime::weak;
  s.levels = {{
      {3.0 * w, 0.0, "|uu>|u_X>"},
      {2.0 * w + root2e, half, "(|uu>|d_X> + |Psi_S>|u_X>)/sqrt2"},
      {2.0 * w - root2e, half, "(|uu>|d_X> - |Psi_S>|u_X>)/sqrt2"},
      {2.0 * w, minus, "|Psi_A>|u_X>"},
      {w + root2e, half, "(|dd>|u_X> + |Psi_S>|d_X>)/sqrt2"},
      {w - root2e, half, "(|dd>|u_X> - |Psi_S>|d_X>)/sqrt2"},
      {w, minus, "|Psi_A>|d_X>"},
      {0.0, 0.0, "|dd>|d_X>"},
  }};
  return s;
}

PerturbativeSpectrum strong_spectrum(const ModelParams& p) {
  if (p.eta <= 0.0)
    throw InvalidRegime("strong_spectrum: requires eta > 0");
  const double w = p.omega, n = p.eta;

  PerturbativeSpectrum s;
  s.regime = Regime::strong;
  s.levels = {{
      {3.0 * w, 0.0, "|uu>|u_X>"},
      {2.0 * w + n, 0.0, "(|ud> + e^{-i phi}|du>)/sqrt2 |u_X>"},
      {2.0 * w - n, 0.0, "(|ud> - e^{-i phi}|du>)/sqrt2 |u_X>"},
      {2.0 * w, 0.0, "|uu>|d_X>"},
      {w + n, 0.0, "(|ud> + e^{-i phi}|du>)/sqrt2 |d_X>"},
      {w - n, 0.0, "(|ud> - e^{-i phi}|du>)/sqrt2 |d_X>"},
      {w, 0.0, "|dd>|u_X>"},
      {0.0, 0.0, "|dd>|d_X>"},
  }};
  return s;
}

ComplexVector weak_basis_vector(int level) {
  assert(level >= 0 && level < 8);
  switch (level) {
    case 0: return unit8(0);
    case 1: {
      // (|uu,d> + |Psi_S,u>)/sqrt2
      ComplexVector v(8);
      v[3] = kInvSqrt2;
      v[1] = 0.5;
      v[2] = 0.5;
      return v;
    }
    case 2: {
      ComplexVector v(8);
      v[3] = kInvSqrt2;
      v[1] = -0.5;
      v[2] = -0.5;
      return v;
    }
    case 3: return pair8(1, 2, Complex(-1.0));
    case 4: {
      ComplexVector v(8);
      v[6] = kInvSqrt2;
      v[4] = 0.5;
      v[5] = 0.5;
      return v;
    }
    case 5: {
      ComplexVector v(8);
      v[6] = kInvSqrt2;
      v[4] = -0.5;
      v[5] = -0.5;
      return v;
    }
    case 6: return pair8(4, 5, Complex(-1.0));
    default: return unit8(7);
  }
}

ComplexVector strong_basis_vector(const ModelParams& p, int level) {
  assert(level >= 0 && level < 8);
  const Complex zeta(cos_pi(p.phi_eta_over_pi), -sin_pi(p.phi_eta_over_pi)); // e^{-i phi}
  switch (level) {
    case 0: return unit8(0);
    case 1: return pair8(1, 2, zeta);
    case 2: return pair8(1, 2, -zeta);
    case 3: return unit8(3);
    case 4: return pair8(4, 5, zeta);
    case 5: return pair8(4, 5, -zeta);
    case 6: return unit8(6);
    default: return unit8(7);
  }
}

OrderReport verify_order(const ModelParams& p, Regime regime) {
  const PerturbativeSpectrum ps =
      (regime == Regime::weak) ? weak_spectrum(p) : strong_spectrum(p);

  OrderReport report;
  report.regime = regime;
  report.small_param =
      (regime == Regime::weak) ? p.eta / p.epsilon : p.epsilon / p.eta;

  const HermitianEig he = hermitian_eig(build_hamiltonian(p));

  // Greedy nearest assignment between exact levels and predictions.
  std::vector<double> predicted(8), exact(he.evals);
  for (int k = 0; k < 8; ++k)
    predicted[static_cast<std::size_t>(k)] =
        ps.levels[static_cast<std::size_t>(k)].zeroth_order +
        ps.levels[static_cast<std::size_t>(k)].first_order;

  std::array<bool, 8> used_pred{}, used_exact{};
  report.levels.resize(8);
  for (int pass = 0; pass < 8; ++pass) {
    int best_i = -1, best_j = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 8; ++i) {
      if (used_pred[static_cast<std::size_t>(i)]) continue;
      for (int j = 0; j < 8; ++j) {
        if (used_exact[static_cast<std::size_t>(j)]) continue;
        const double d = std::abs(predicted[static_cast<std::size_t>(i)] -
                                  exact[static_cast<std::size_t>(j)]);
        if (d < best) {
          best = d;
          best_i = i;
          best_j = j;
        }
      }
    }
    used_pred[static_cast<std::size_t>(best_i)] = true;
    used_exact[static_cast<std::size_t>(best_j)] = true;
    auto& lm = report.levels[static_cast<std::size_t>(best_i)];
    lm.predicted = predicted[static_cast<std::size_t>(best_i)];
    lm.exact = exact[static_cast<std::size_t>(best_j)];
    lm.residual = best;
    lm.label = ps.levels[static_cast<std::size_t>(best_i)].label;
    report.max_residual = std::max(report.max_residual, best);
  }

  double min_spacing = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      min_spacing = std::min(min_spacing, std::abs(predicted[static_cast<std::size_t>(i)] -
                                                   predicted[static_cast<std::size_t>(j)]));
  report.ambiguous = min_spacing < 10.0 * report.max_residual;
  return report;
}

} // namespace purext
