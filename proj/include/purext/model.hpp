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

#include "purext/types.hpp"

namespace purext {

/// Physical constants of the three-qubit system: two qubits A and B with a
/// common Bohr frequency omega, both coupled to the measured ancilla X with
/// strength epsilon, plus a direct A-B exchange coupling eta e^{i phi}.
/// Angles are carried as multiples of pi throughout this project, so the
/// special phases (phi = pi/2 in particular) are represented exactly.
struct ModelParams {
  double omega = 0.0;
  double epsilon = 0.0;        ///< >= 0; sign conventions live in the phases
  double eta = 0.0;            ///< >= 0
  double phi_eta_over_pi = 0.0; ///< A-B coupling phase, units of pi
};

/// The repeatedly measured ancilla state cos(theta)|up> + e^{-i phi_x} sin(theta)|down>.
struct AncillaState {
  double theta_over_pi = 0.25;
  double phi_x_over_pi = 0.0;
};

/// Index map between composite labels and matrix rows. The 8-dimensional
/// order is (uu u_X, ud u_X, du u_X, uu d_X, ud d_X, du d_X, dd u_X, dd d_X);
/// the two-qubit order is (uu, ud, du, dd).
namespace basis {
/// Row of the 8x8 Hamiltonian for two-qubit index ab in {0..3} and ancilla
/// index x in {0: up, 1: down}.
inline constexpr int composite(int ab, int x) {
  constexpr int table[4][2] = {{0, 3}, {1, 4}, {2, 5}, {6, 7}};
  return table[ab][x];
}
inline constexpr const char* ab_label(int ab) {
  constexpr const char* names[4] = {"uu", "ud", "du", "dd"};
  return names[ab];
}
} // namespace basis

/// The 8x8 three-qubit Hamiltonian: diagonal (3w, 2w, 2w, 2w, w, w, w, 0),
/// the A-B exchange eta e^{i phi} inside each ancilla sector, and the six
/// epsilon couplings to the ancilla. Hermitian by construction.
ComplexMatrix build_hamiltonian(const ModelParams& p);

/// Unit-norm ancilla 2-vector in the (up, down) order.
ComplexVector ancilla_vector(const AncillaState& a);

/// V(tau): the full propagator sandwiched between the measured ancilla
/// state, i.e. V_{mn} = sum_{s,s'} chi_s^* U(idx(m,s), idx(n,s')) chi_{s'}.
/// A contraction: largest singular value <= 1 (up to solver error).
ComplexMatrix effective_operator(const ModelParams& p, const AncillaState& a, double tau);

/// Same projection applied to an already-built 8x8 propagator; lets sweeps
/// reuse one Hamiltonian eigendecomposition across many grid cells.
ComplexMatrix effective_from_propagator(const ComplexMatrix& u, const ComplexVector& chi);

} // namespace purext
