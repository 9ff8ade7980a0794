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

#include "purext/model.hpp"

#include <cassert>
#include <cmath>

#include "purext/errors.hpp"
#include "purext/linalg.hpp"

namespace purext {

namespace {

void check_params(const ModelParams& p) {
  if (!std::isfinite(p.omega) || !std::isfinite(p.epsilon) || !std::isfinite(p.eta) ||
      !std::isfinite(p.phi_eta_over_pi))
    throw Error("ModelParams: non-finite value");
  if (p.epsilon < 0.0 || p.eta < 0.0)
    throw Error("ModelParams: epsilon and eta must be non-negative");
}

} // namespace

ComplexMatrix build_hamiltonian(const ModelParams& p) {
  check_params(p);
  const double w = p.omega;
  const double e = p.epsilon;
  const Complex eta_phase(p.eta * cos_pi(p.phi_eta_over_pi), p.eta * sin_pi(p.phi_eta_over_pi));

  ComplexMatrix h(8);
  h(0, 0) = 3.0 * w;
  h(1, 1) = 2.0 * w;
  h(2, 2) = 2.0 * w;
  h(3, 3) = 2.0 * w;
  h(4, 4) = w;
  h(5, 5) = w;
  h(6, 6) = w;
  h(7, 7) = 0.0;

  // A-B exchange inside each ancilla sector.
  h(1, 2) = eta_phase;
  h(2, 1) = std::conj(eta_phase);
  h(4, 5) = eta_phase;
  h(5, 4) = std::conj(eta_phase);

  // Couplings to the measured ancilla.
  h(1, 3) = e;
  h(3, 1) = e;
  h(2, 3) = e;
  h(3, 2) = e;
  h(4, 6) = e;
  h(6, 4) = e;
  h(5, 6) = e;
  h(6, 5) = e;
  return h;
}

ComplexVector ancilla_vector(const AncillaState& a) {
  if (!std::isfinite(a.theta_over_pi) || !std::isfinite(a.phi_x_over_pi))
    throw Error("AncillaState: non-finite value");
  const double ct = cos_pi(a.theta_over_pi);
  const double st = sin_pi(a.theta_over_pi);
  const Complex phase(cos_pi(a.phi_x_over_pi), -sin_pi(a.phi_x_over_pi));
  ComplexVector chi(2);
  chi[0] = ct;
  chi[1] = phase * st;
  assert(std::abs(chi.norm() - 1.0) < 1e-12);
  return chi;
}

ComplexMatrix effective_from_propagator(const ComplexMatrix& u, const ComplexVector& chi) {
  assert(u.dim() == 8 && chi.dim() == 2);
  ComplexMatrix v(4);
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      Complex s = 0.0;
      for (int sx = 0; sx < 2; ++sx)
        for (int sz = 0; sz < 2; ++sz)
          s += std::conj(chi[sx]) * u(basis::composite(m, sx), basis::composite(n, sz)) *
               chi[sz];
      v(m, n) = s;
    }
  }
  return v;
}

ComplexMatrix effective_operator(const ModelParams& p, const AncillaState& a, double tau) {
  const ComplexMatrix u = unitary_propagator(build_hamiltonian(p), tau);
  return effective_from_propagator(u, ancilla_vector(a));
}

} // namespace purext
