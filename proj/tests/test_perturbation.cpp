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

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "purext/linalg.hpp"

using namespace purext;
using testing::Rand;

namespace {

double eigvec_residual(const ComplexMatrix& h, const ComplexVector& v, double energy) {
  const ComplexVector hv = h * v;
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) worst = std::max(worst, std::abs(hv[i] - energy * v[i]));
  return worst;
}

} // namespace

TEST_CASE("weak_spectrum: phi = pi/2 kills every first-order correction") {
  const PerturbativeSpectrum s = weak_spectrum({2.0, 1.0, 0.42, 0.5});
  for (const auto& level : s.levels) CHECK(level.first_order == 0.0);
}

TEST_CASE("weak_spectrum: phi = 0 level values") {
  const double eta = 0.3;
  const PerturbativeSpectrum s = weak_spectrum({2.0, 1.0, eta, 0.0});
  CHECK(s.levels[1].zeroth_order == doctest::Approx(4.0 + std::sqrt(2.0)));
  CHECK(s.levels[1].first_order == doctest::Approx(eta / 2.0));
  CHECK(s.levels[3].first_order == doctest::Approx(-eta));
  CHECK(s.levels[0].first_order == 0.0);
  CHECK(s.levels[7].first_order == 0.0);
}

TEST_CASE("weak_spectrum: eta = 0 leaves the dressed levels untouched") {
  const PerturbativeSpectrum s = weak_spectrum({2.0, 1.0, 0.0, 0.3});
  for (const auto& level : s.levels) CHECK(level.first_order == 0.0);
  CHECK_THROWS_AS(weak_spectrum({2.0, 0.0, 0.1, 0.0}), InvalidRegime);
}

TEST_CASE("weak_spectrum: first-order corrections are traceless, exactly") {
  Rand rng(79);
  for (int trial = 0; trial < 50; ++trial) {
    const PerturbativeSpectrum s =
        weak_spectrum({rng.uniform(-2.0, 2.0), 1.0, rng.uniform(0.0, 2.0),
                       rng.uniform(0.0, 2.0)});
    double sum = 0.0;
    for (const auto& level : s.levels) sum += level.first_order;
    CHECK(sum == 0.0);
  }
}

TEST_CASE("weak_spectrum: phi -> pi - phi flips every correction sign") {
  const double eta = 0.8;
  for (double x : {0.1, 0.3, 0.45}) {
    const PerturbativeSpectrum a = weak_spectrum({2.0, 1.0, eta, x});
    const PerturbativeSpectrum b = weak_spectrum({2.0, 1.0, eta, 1.0 - x});
    for (int k = 0; k < 8; ++k)
      CHECK(b.levels[static_cast<std::size_t>(k)].first_order ==
            doctest::Approx(-a.levels[static_cast<std::size_t>(k)].first_order)
                .epsilon(1e-13));
  }
}

TEST_CASE("strong_spectrum: all first orders vanish; levels by substitution") {
  const PerturbativeSpectrum s = strong_spectrum({2.0, 0.1, 5.0, 0.7});
  for (const auto& level : s.levels) CHECK(level.first_order == 0.0);
  const double expected[8] = {6.0, 9.0, -1.0, 4.0, 7.0, -3.0, 2.0, 0.0};
  for (int k = 0; k < 8; ++k)
    CHECK(s.levels[static_cast<std::size_t>(k)].zeroth_order == doctest::Approx(expected[k]));
  CHECK_THROWS_AS(strong_spectrum({2.0, 0.1, 0.0, 0.0}), InvalidRegime);
}

TEST_CASE("weak basis vectors diagonalize the eta = 0 Hamiltonian") {
  const ModelParams p{2.0, 1.0, 0.0, 0.0};
  const ComplexMatrix h = build_hamiltonian(p);
  const PerturbativeSpectrum s = weak_spectrum(p);
  for (int k = 0; k < 8; ++k)
    CHECK(eigvec_residual(h, weak_basis_vector(k),
                          s.levels[static_cast<std::size_t>(k)].zeroth_order) < 1e-12);
}

TEST_CASE("strong basis vectors diagonalize the eps = 0 Hamiltonian") {
  Rand rng(83);
  for (int trial = 0; trial < 10; ++trial) {
    const ModelParams p{rng.uniform(-2.0, 2.0), 0.0, rng.uniform(0.1, 3.0),
                        rng.uniform(0.0, 2.0)};
    const ComplexMatrix h = build_hamiltonian(p);
    const PerturbativeSpectrum s = strong_spectrum(p);
    for (int k = 0; k < 8; ++k)
      CHECK(eigvec_residual(h, strong_basis_vector(p, k),
                            s.levels[static_cast<std::size_t>(k)].zeroth_order) < 1e-12);
  }
}

TEST_CASE("verify_order: weak residual scales quadratically in eta/eps") {
  for (double phi : {0.0, 0.25, 0.5}) {
    const OrderReport r1 = verify_order({2.0, 1.0, 1e-3, phi}, Regime::weak);
    const OrderReport r2 = verify_order({2.0, 1.0, 1e-4, phi}, Regime::weak);
    REQUIRE(!r1.ambiguous);
    REQUIRE(!r2.ambiguous);
    REQUIRE(r2.max_residual > 0.0);
    const double ratio = r1.max_residual / r2.max_residual;
    CHECK(ratio >= 50.0);
    CHECK(ratio <= 200.0);
  }
}

TEST_CASE("verify_order: strong residual scales quadratically in eps/eta") {
  const double eta = 1.0, omega = 2.3;
  const OrderReport r1 = verify_order({omega, 1e-3 * eta, eta, 0.35}, Regime::strong);
  const OrderReport r2 = verify_order({omega, 1e-4 * eta, eta, 0.35}, Regime::strong);
  REQUIRE(!r1.ambiguous);
  REQUIRE(!r2.ambiguous);
  REQUIRE(r2.max_residual > 0.0);
  const double ratio = r1.max_residual / r2.max_residual;
  CHECK(ratio >= 50.0);
  CHECK(ratio <= 200.0);
}

TEST_CASE("verify_order: eta = 0 reproduces the exact spectrum") {
  const OrderReport r = verify_order({2.0, 1.0, 0.0, 0.0}, Regime::weak);
  CHECK(r.max_residual < 1e-12);
}

TEST_CASE("eigenvector overlap deficits shrink quadratically") {
  // 1 - |<exact|unperturbed>|^2 = O((eta/eps)^2)
  const ModelParams small{2.0, 1.0, 1e-3, 0.2};
  const ModelParams smaller{2.0, 1.0, 1e-4, 0.2};
  auto max_deficit = [](const ModelParams& p) {
    const HermitianEig he = hermitian_eig(build_hamiltonian(p));
    const PerturbativeSpectrum s = weak_spectrum(p);
    double worst = 0.0;
    for (int k = 0; k < 8; ++k) {
      // pick the exact eigenpair nearest in energy
      int best = 0;
      double bd = 1e300;
      for (int j = 0; j < 8; ++j) {
        const double d = std::abs(he.evals[static_cast<std::size_t>(j)] -
                                  s.levels[static_cast<std::size_t>(k)].zeroth_order);
        if (d < bd) {
          bd = d;
          best = j;
        }
      }
      const ComplexVector v0 = weak_basis_vector(k);
      Complex ov = 0.0;
      for (int r = 0; r < 8; ++r) ov += std::conj(he.vecs(r, best)) * v0[r];
      worst = std::max(worst, 1.0 - std::norm(ov));
    }
    return worst;
  };
  const double d1 = max_deficit(small);
  const double d2 = max_deficit(smaller);
  REQUIRE(d2 > 0.0);
  const double ratio = d1 / d2;
  CHECK(ratio >= 30.0);
  CHECK(ratio <= 300.0);
}
