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

#include <array>
#include <string>
#include <vector>

#include "purext/model.hpp"
#include "purext/types.hpp"

namespace purext {

enum class Regime { weak, strong };

/// Analytic spectra in the two coupling regimes, used as independent
/// oracles against exact diagonalization.
///
/// Weak (eta << epsilon): zeroth order from the epsilon-dressed levels
/// {3w, 2w + e*sqrt2, 2w - e*sqrt2, 2w, w + e*sqrt2, w - e*sqrt2, w, 0},
/// first order in eta as {0, (eta/2)cos(phi), (eta/2)cos(phi), -eta cos(phi),
/// (eta/2)cos(phi), (eta/2)cos(phi), -eta cos(phi), 0}.
///
/// Strong (epsilon << eta): zeroth order {3w, 2w+eta, 2w-eta, 2w, w+eta,
/// w-eta, w, 0}; all first-order corrections vanish.
struct PerturbativeSpectrum {
  struct Level {
    double zeroth_order = 0.0;
    double first_order = 0.0;
    std::string label;
  };
  Regime regime = Regime::weak;
  std::array<Level, 8> levels;
};

/// Throws InvalidRegime when epsilon = 0.
PerturbativeSpectrum weak_spectrum(const ModelParams& p);

/// Throws InvalidRegime when eta = 0.
PerturbativeSpectrum strong_spectrum(const ModelParams& p);

/// Zeroth-order eigenvector of level k (0..7) in the 8-dimensional
/// composite basis. The weak vectors are parameter-free; the strong ones
/// carry the e^{-i phi} relative phase.
ComplexVector weak_basis_vector(int level);
ComplexVector strong_basis_vector(const ModelParams& p, int level);

/// Numerical check of the perturbative spectra: exact levels matched to
/// zeroth+first-order predictions by greedy nearest assignment.
struct OrderReport {
  struct LevelMatch {
    double predicted = 0.0;
    double exact = 0.0;
    double residual = 0.0;
    std::string label;
  };
  Regime regime = Regime::weak;
  double small_param = 0.0; ///< eta/epsilon (weak) or epsilon/eta (strong)
  std::vector<LevelMatch> levels;
  double max_residual = 0.0;
  bool ambiguous = false; ///< min predicted level spacing < 10 x max residual
};

OrderReport verify_order(const ModelParams& p, Regime regime);

} // namespace purext
