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

#include <cstdint>

#include "purext/analysis.hpp"
#include "purext/model.hpp"
#include "purext/types.hpp"

namespace purext {

/// Full 8-dimensional simulation of the repeated projective measurement
/// protocol. This path never touches the effective operator: each step
/// attaches the ancilla, evolves with the full propagator, projects onto the
/// measured ancilla state and traces the ancilla out again. It exists as an
/// independent cross-check of the V(tau)-based dynamics.

struct MeasurementRecord {
  int steps = 0;
  double survival_probability = 1.0; ///< product of per-step success probabilities
  DensityMatrix conditional_state;   ///< normalized, on the two-qubit space
};

/// Throws ZeroProbability when a step's success probability falls below
/// tol::zero_probability (the conditional protocol is extinct).
MeasurementRecord run_protocol(const ModelParams& p, const AncillaState& a, double tau,
                               const DensityMatrix& rho0, int n);

struct TrajectorySummary {
  std::int64_t trials = 0;
  std::int64_t survived = 0;
  double survival_frequency = 0.0;
  double mean_top_overlap = 0.0; ///< mean |<l_1|psi_final>|^2 over surviving trials
};

/// Stochastic realization of the conditional scheme for a pure initial
/// state: each trial draws the binary measurement outcome at every step with
/// its exact conditional probability and aborts on the first failure.
/// Deterministic for a fixed seed and independent of the worker count
/// (per-trial substreams, index-ordered reduction).
TrajectorySummary sample_trajectories(const ModelParams& p, const AncillaState& a,
                                      double tau, const ComplexVector& psi0, int n,
                                      std::int64_t trials, std::uint64_t seed,
                                      int workers = 1);

} // namespace purext
