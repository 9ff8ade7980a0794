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

#include "purext/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "purext/linalg.hpp"

namespace purext {

SpectralData spectral_decompose(const ComplexMatrix& v) {
  assert(v.dim() == 4);
  const GeneralEig ge = general_eig(v);
  const int n = v.dim();

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  auto key_less = [&](int i, int j) {
    const Complex a = ge.evals[static_cast<std::size_t>(i)];
    const Complex b = ge.evals[static_cast<std::size_t>(j)];
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma > mb;
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  };
  std::stable_sort(order.begin(), order.end(), key_less);

  SpectralData sd;
  sd.defective = ge.defective;
  sd.eigenvalues.resize(static_cast<std::size_t>(n));
  sd.right_vecs.resize(static_cast<std::size_t>(n), ComplexVector(n));
  ComplexMatrix r(n);
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    sd.eigenvalues[static_cast<std::size_t>(k)] = ge.evals[static_cast<std::size_t>(src)];
    for (int row = 0; row < n; ++row) {
      const Complex x = ge.right_vecs(row, src);
      sd.right_vecs[static_cast<std::size_t>(k)][row] = x;
      r(row, k) = x;
    }
  }
  sd.degenerate_top =
      std::abs(sd.eigenvalues[0]) - std::abs(sd.eigenvalues[1]) < tol::gap_tol;

  if (!sd.defective) {
    ComplexMatrix l;
    double cond = 0.0;
    if (try_invert(r, l, cond) && cond <= tol::defective_cond) {
      sd.left_vecs.resize(static_cast<std::size_t>(n), ComplexVector(n));
      for (int k = 0; k < n; ++k)
        for (int col = 0; col < n; ++col)
          sd.left_vecs[static_cast<std::size_t>(k)][col] = l(k, col);
    } else {
      sd.defective = true;
    }
  }
  return sd;
}

double entanglement_upsilon(const ComplexVector& state) {
  assert(state.dim() == 4);
  if (std::abs(state.norm() - 1.0) > tol::norm_check)
    throw NotNormalized("entanglement_upsilon: state norm deviates from 1");
  const ComplexMatrix rho_b = partial_trace_first(outer(state, state));
  double purity = 0.0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) purity += (rho_b(r, c) * rho_b(c, r)).real();
  return 2.0 * (1.0 - purity);
}

WitnessTriple witnesses(const SpectralData& sd) {
  WitnessTriple w;
  w.degenerate_top = sd.degenerate_top;
  const double m1 = std::abs(sd.eigenvalues[0]);
  const double m2 = std::abs(sd.eigenvalues[1]);
  w.sigma = m1 * m1;
  w.lambda_eff = (m1 < 1e-14) ? 0.0 : 1.0 - (m2 / m1) * (m2 / m1);
  w.upsilon = entanglement_upsilon(sd.right_vecs[0]);
  return w;
}

DensityMatrix evolve_conditional(const ComplexMatrix& v, const DensityMatrix& rho0, int n) {
  assert(n >= 0);
  DensityMatrix rho = rho0;
  const ComplexMatrix vdag = v.adjoint();
  for (int step = 0; step < n; ++step) rho = v * rho * vdag;
  return rho;
}

double success_probability(const SpectralData& sd, const DensityMatrix& rho0, int n) {
  if (sd.degenerate_top)
    throw DegenerateTop("success_probability: |l_1| = |l_2|, no single state is extracted");
  if (sd.defective || sd.left_vecs.empty())
    throw DefectiveMatrix("success_probability: left eigenvectors unavailable");
  const ComplexVector& l1 = sd.left_vecs[0];
  Complex q = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) q += l1[a] * rho0(a, b) * std::conj(l1[b]);
  assert(std::abs(q.imag()) <= 1e-12 * std::max(1.0, std::abs(q.real())));
  const double m1 = std::abs(sd.eigenvalues[0]);
  return std::max(0.0, q.real()) * std::pow(m1, 2.0 * n);
}

} // namespace purext
