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

/// Unnormalized two-qubit density operator. Conditional states keep their
/// trace (the survival probability) until explicitly renormalized.
using DensityMatrix = ComplexMatrix;

/// Biorthogonal eigensystem of the effective operator, sorted by descending
/// eigenvalue modulus. Left vectors are the rows of the inverse
/// right-eigenvector matrix, so <l~_i|l_j> = delta_ij holds by construction;
/// they are omitted (empty) when the system is flagged defective.
struct SpectralData {
  std::vector<Complex> eigenvalues;      ///< |l_1| >= ... >= |l_4|
  std::vector<ComplexVector> right_vecs; ///< unit norm
  std::vector<ComplexVector> left_vecs;  ///< bra components; empty if defective
  bool degenerate_top = false;           ///< |l_1| - |l_2| < tol::gap_tol
  bool defective = false;                ///< eigenvector condition estimate > tol::defective_cond
};

/// Extraction witnesses. All three lie in [0, 1]: upsilon is the
/// entanglement of the extracted state, lambda_eff = 1 - |l_2/l_1|^2 the
/// efficiency, sigma = |l_1|^2 the stability.
struct WitnessTriple {
  double upsilon = 0.0;
  double lambda_eff = 0.0;
  double sigma = 0.0;
  bool degenerate_top = false;
};

/// Sorted biorthogonal decomposition of a 4x4 effective operator. Ties in
/// modulus break by descending real part, then descending imaginary part.
SpectralData spectral_decompose(const ComplexMatrix& v);

/// 2(1 - purity of the reduced one-qubit state) for a pure two-qubit state;
/// 0 for products, 1 for maximally entangled states.
/// Throws NotNormalized if the norm deviates by more than tol::norm_check.
double entanglement_upsilon(const ComplexVector& state);

WitnessTriple witnesses(const SpectralData& sd);

/// N-step conditional (unnormalized) state V^n rho0 V^dag^n by repeated
/// multiplication; the trace is the survival probability of n consecutive
/// successful measurements.
DensityMatrix evolve_conditional(const ComplexMatrix& v, const DensityMatrix& rho0, int n);

/// Asymptotic success probability <l~_1|rho0|l~_1> |l_1|^{2n}.
/// Throws DegenerateTop when |l_1| = |l_2| (no single state is extracted)
/// and DefectiveMatrix when left vectors are unavailable.
double success_probability(const SpectralData& sd, const DensityMatrix& rho0, int n);

} // namespace purext
