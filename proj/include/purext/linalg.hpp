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

#include "purext/errors.hpp"
#include "purext/types.hpp"

namespace purext {

/// Dense complex linear algebra kernel for the small matrices used here
/// (dimension <= 8). All functions are pure; inputs are never modified.

struct HermitianEig {
  std::vector<double> evals; ///< ascending
  ComplexMatrix vecs;        ///< unitary; column k pairs with evals[k]
};

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
/// Throws NotHermitian if max |m - m^dag| > tol::hermiticity, NoConvergence
/// if the off-diagonal norm does not fall below the (relative) threshold
/// within tol::jacobi_max_sweeps sweeps.
HermitianEig hermitian_eig(const ComplexMatrix& m);

/// exp(-i h tau) through the spectral decomposition of Hermitian h.
/// Unitary to eigensolver accuracy by construction; tau may be negative.
ComplexMatrix unitary_propagator(const ComplexMatrix& h, double tau);

struct GeneralEig {
  std::vector<Complex> evals;  ///< with multiplicity, in Schur order
  ComplexMatrix right_vecs;    ///< unit-norm columns, column k pairs with evals[k]
  bool defective = false;      ///< eigenvector matrix condition estimate > tol::defective_cond
  double evec_condition = 0.0; ///< inf-norm condition estimate of right_vecs
};

/// Eigendecomposition of a general (non-Hermitian) 4x4 complex matrix:
/// balance, Givens reduction to upper Hessenberg, implicit single-shift QR
/// to complex Schur form, eigenvectors by back-substitution on the
/// triangular factor. Residual |m r_k - lambda_k r_k| <= tol::general_eig_residual.
GeneralEig general_eig(const ComplexMatrix& m);

/// Gauss-Jordan inverse with partial pivoting. Throws SingularMatrix when a
/// pivot vanishes or the condition estimate exceeds tol::invert_cond_max.
ComplexMatrix invert(const ComplexMatrix& m);

/// Inverse without the condition policy; returns false on a zero pivot.
/// cond receives the inf-norm condition estimate when inversion succeeds.
bool try_invert(const ComplexMatrix& m, ComplexMatrix& out, double& cond);

/// Reduced state of the second qubit: rho_B(s,s') = sum_a rho(as, as') in
/// the (uu, ud, du, dd) product ordering. Trace-preserving.
ComplexMatrix partial_trace_first(const ComplexMatrix& rho);

/// Largest singular value, via the Hermitian spectrum of m^dag m.
double spectral_norm(const ComplexMatrix& m);

} // namespace purext
