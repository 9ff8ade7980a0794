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

#include "purext/oracle.hpp"

#include <cassert>
#include <cmath>
#include <vector>

#include "purext/errors.hpp"
#include "purext/linalg.hpp"
#include "purext/parallel.hpp"
#include "purext/rng.hpp"

namespace purext {

namespace {

// rho_AB tensor |chi><chi| in the composite basis ordering.
ComplexMatrix attach_ancilla(const DensityMatrix& rho, const ComplexVector& chi) {
  ComplexMatrix full(8);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int s = 0; s < 2; ++s)
        for (int sp = 0; sp < 2; ++sp)
          full(basis::composite(m, s), basis::composite(n, sp)) =
              rho(m, n) * chi[s] * std::conj(chi[sp]);
  return full;
}

// I_4 tensor |chi><chi|.
ComplexMatrix measurement_projector(const ComplexVector& chi) {
  ComplexMatrix proj(8);
  for (int m = 0; m < 4; ++m)
    for (int s = 0; s < 2; ++s)
      for (int sp = 0; sp < 2; ++sp)
        proj(basis::composite(m, s), basis::composite(m, sp)) = chi[s] * std::conj(chi[sp]);
  return proj;
}

ComplexMatrix trace_out_ancilla(const ComplexMatrix& full) {
  ComplexMatrix rho(4);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      rho(m, n) = full(basis::composite(m, 0), basis::composite(n, 0)) +
                  full(basis::composite(m, 1), basis::composite(n, 1));
  return rho;
}

} // namespace

MeasurementRecord run_protocol(const ModelParams& p, const AncillaState& a, double tau,
                               const DensityMatrix& rho0, int n) {
  assert(n >= 1);
  if (std::abs(rho0.trace().real() - 1.0) > tol::norm_check)
    throw NotNormalized("run_protocol: rho0 must have unit trace");

  const ComplexMatrix u = unitary_propagator(build_hamiltonian(p), tau);
  const ComplexMatrix udag = u.adjoint();
  const ComplexVector chi = ancilla_vector(a);
  const ComplexMatrix proj = measurement_projector(chi);

  MeasurementRecord rec;
  rec.steps = n;
  DensityMatrix rho = rho0;
  for (int step = 0; step < n; ++step) {
    const ComplexMatrix evolved = u * attach_ancilla(rho, chi) * udag;
    const ComplexMatrix projected = proj * evolved * proj;
    const double p_step = projected.trace().real();
    if (!(p_step > tol::zero_probability))
      throw ZeroProbability("run_protocol: conditional probability vanished at step " +
                            std::to_string(step + 1));
    rec.survival_probability *= p_step;
    rho = trace_out_ancilla(projected) * Complex(1.0 / p_step);
  }
  rec.conditional_state = rho;
  return rec;
}

TrajectorySummary sample_trajectories(const ModelParams& p, const AncillaState& a,
                                      double tau, const ComplexVector& psi0, int n,
                                      std::int64_t trials, std::uint64_t seed,
                                      int workers) {
  assert(trials >= 1 && n >= 0);
  if (std::abs(psi0.norm() - 1.0) > tol::norm_check)
    throw NotNormalized("sample_trajectories: psi0 must be unit norm");

  const ComplexMatrix v = effective_operator(p, a, tau);
  const SpectralData sd = spectral_decompose(v);
  const ComplexVector& top = sd.right_vecs[0];

  std::vector<unsigned char> alive(static_cast<std::size_t>(trials), 0);
  std::vector<double> overlap(static_cast<std::size_t>(trials), 0.0);

  parallel_for(trials, workers, [&](std::int64_t t) {
    SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(t));
    ComplexVector psi = psi0;
    bool ok = true;
    for (int step = 0; step < n; ++step) {
      const ComplexVector next = v * psi;
      const double prob = std::min(1.0, next.norm() * next.norm());
      if (rng.uniform() >= prob) {
        ok = false;
        break;
      }
      psi = next.normalized();
    }
    if (ok) {
      alive[static_cast<std::size_t>(t)] = 1;
      overlap[static_cast<std::size_t>(t)] = std::norm(inner(top, psi));
    }
  });

  TrajectorySummary out;
  out.trials = trials;
  double sum = 0.0;
  for (std::int64_t t = 0; t < trials; ++t) {
    if (alive[static_cast<std::size_t>(t)]) {
      ++out.survived;
      sum += overlap[static_cast<std::size_t>(t)];
    }
  }
  out.survival_frequency =
      static_cast<double>(out.survived) / static_cast<double>(trials);
  out.mean_top_overlap = out.survived > 0 ? sum / static_cast<double>(out.survived) : 0.0;
  return out;
}

} // namespace purext
