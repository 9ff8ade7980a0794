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

#include "purext/linalg.hpp"

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "purext/model.hpp"

using namespace purext;
using testing::Rand;

namespace {

ComplexMatrix reconstruct(const HermitianEig& he) {
  const int n = he.vecs.dim();
  ComplexMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Complex s = 0.0;
      for (int k = 0; k < n; ++k)
        s += he.vecs(r, k) * he.evals[static_cast<std::size_t>(k)] *
             std::conj(he.vecs(c, k));
      m(r, c) = s;
    }
  return m;
}

double unitarity_defect(const ComplexMatrix& u) {
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.dim()));
}

} // namespace

TEST_CASE("hermitian_eig: diagonal ladder input stays put") {
  const double w = 1.3;
  ComplexMatrix m(4);
  m(0, 0) = 0.0;
  m(1, 1) = w;
  m(2, 2) = 2.0 * w;
  m(3, 3) = 3.0 * w;
  const HermitianEig he = hermitian_eig(m);
  CHECK(he.evals[0] == doctest::Approx(0.0));
  CHECK(he.evals[1] == doctest::Approx(w));
  CHECK(he.evals[2] == doctest::Approx(2.0 * w));
  CHECK(he.evals[3] == doctest::Approx(3.0 * w));
  CHECK(max_abs_diff(he.vecs, ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("hermitian_eig: 2x2 exchange block") {
  const double e = 0.7;
  ComplexMatrix m(2);
  m(0, 1) = e;
  m(1, 0) = e;
  const HermitianEig he = hermitian_eig(m);
  CHECK(he.evals[0] == doctest::Approx(-e).epsilon(1e-12));
  CHECK(he.evals[1] == doctest::Approx(e).epsilon(1e-12));
}

TEST_CASE("hermitian_eig: three-qubit Hamiltonian has the dressed doublets") {
  // omega/eps = 2, eta = 0: the spectrum contains 2w +- e*sqrt2 and w +- e*sqrt2.
  const ComplexMatrix h = build_hamiltonian({2.0, 1.0, 0.0, 0.0});
  const HermitianEig he = hermitian_eig(h);
  const double r2 = std::sqrt(2.0);
  const double expected[8] = {0.0, 2.0 - r2, 2.0, 4.0 - r2, 2.0 + r2, 4.0, 4.0 + r2, 6.0};
  for (int k = 0; k < 8; ++k)
    CHECK(he.evals[static_cast<std::size_t>(k)] ==
          doctest::Approx(expected[k]).epsilon(1e-10));
}

TEST_CASE("hermitian_eig: reconstruction and orthonormality on random inputs") {
  Rand rng(2026);
  double worst_recon = 0.0, worst_unit = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const ComplexMatrix m = rng.hermitian(8, 2.0);
    const HermitianEig he = hermitian_eig(m);
    worst_recon = std::max(worst_recon, max_abs_diff(reconstruct(he), m));
    worst_unit = std::max(worst_unit, unitarity_defect(he.vecs));
    for (std::size_t k = 1; k < he.evals.size(); ++k)
      CHECK(he.evals[k - 1] <= he.evals[k]);
  }
  CHECK(worst_recon < tol::eig_reconstruct);
  CHECK(worst_unit < 1e-10);
}

TEST_CASE("hermitian_eig: rejects non-Hermitian input") {
  ComplexMatrix m(2);
  m(0, 1) = Complex(0.0, 1.0);
  m(1, 0) = Complex(0.0, 1.0); // should be -i
  CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
}

TEST_CASE("unitary_propagator: tau = 0 gives the identity") {
  Rand rng(7);
  const ComplexMatrix h = rng.hermitian(8);
  const ComplexMatrix u = unitary_propagator(h, 0.0);
  CHECK(max_abs_diff(u, ComplexMatrix::identity(8)) < 1e-12);
}

TEST_CASE("unitary_propagator: diagonal Hamiltonian") {
  ComplexMatrix h(2);
  h(0, 0) = 0.8;
  h(1, 1) = -1.1;
  const double t = 2.7;
  const ComplexMatrix u = unitary_propagator(h, t);
  CHECK(std::abs(u(0, 0) - std::polar(1.0, -0.8 * t)) < 1e-14);
  CHECK(std::abs(u(1, 1) - std::polar(1.0, 1.1 * t)) < 1e-14);
  CHECK(std::abs(u(0, 1)) < 1e-14);
  CHECK(std::abs(u(1, 0)) < 1e-14);
}

TEST_CASE("unitary_propagator: matches the Taylor-series oracle") {
  const ComplexMatrix h = build_hamiltonian({2.0, 1.0, 0.0, 0.0});
  const ComplexMatrix u = unitary_propagator(h, 1.0);
  CHECK(unitarity_defect(u) < tol::unitarity);
  CHECK(max_abs_diff(u, testing::expm_taylor(h, 1.0)) < 1e-12);

  Rand rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix hr = rng.hermitian(4, 1.5);
    const double tau = rng.uniform(-3.0, 3.0);
    CHECK(max_abs_diff(unitary_propagator(hr, tau), testing::expm_taylor(hr, tau)) < 1e-12);
  }
}

TEST_CASE("unitary_propagator: group property") {
  Rand rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix h = rng.hermitian(8);
    const double t1 = rng.uniform(-2.0, 2.0), t2 = rng.uniform(-2.0, 2.0);
    const ComplexMatrix lhs = unitary_propagator(h, t1) * unitary_propagator(h, t2);
    CHECK(max_abs_diff(lhs, unitary_propagator(h, t1 + t2)) < 1e-10);
  }
}

TEST_CASE("general_eig: identity and diagonal cases") {
  const GeneralEig id = general_eig(ComplexMatrix::identity(4));
  for (const Complex& ev : id.evals) CHECK(std::abs(ev - Complex(1.0)) < 1e-14);

  ComplexMatrix d(4);
  d(0, 0) = 0.9;
  d(1, 1) = 0.5 * std::polar(1.0, M_PI / 3.0);
  d(2, 2) = 0.1;
  d(3, 3) = 0.0;
  const GeneralEig ge = general_eig(d);
  std::vector<Complex> expected{d(0, 0), d(1, 1), d(2, 2), d(3, 3)};
  CHECK(testing::multiset_distance(ge.evals, expected) < 1e-14);
  // standard basis eigenvectors, up to phase and ordering
  for (int k = 0; k < 4; ++k) {
    double top = 0.0;
    for (int r = 0; r < 4; ++r) top = std::max(top, std::abs(ge.right_vecs(r, k)));
    CHECK(top == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("general_eig: residual property on random matrices") {
  Rand rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const ComplexMatrix m = rng.matrix_unit_disc(4);
    const GeneralEig ge = general_eig(m);
    for (int k = 0; k < 4; ++k) {
      ComplexVector r(4);
      for (int i = 0; i < 4; ++i) r[i] = ge.right_vecs(i, k);
      const ComplexVector mr = m * r;
      double resid = 0.0;
      for (int i = 0; i < 4; ++i)
        resid = std::max(resid, std::abs(mr[i] - ge.evals[static_cast<std::size_t>(k)] * r[i]));
      CHECK(resid < tol::general_eig_residual);
    }
  }
}

TEST_CASE("general_eig: eigenvalues agree with the characteristic-quartic oracle") {
  Rand rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix m = rng.matrix_unit_disc(4);
    const GeneralEig ge = general_eig(m);
    const std::array<Complex, 4> roots = testing::quartic_roots(testing::char_poly_4(m));
    CHECK(testing::multiset_distance(ge.evals,
                                     std::vector<Complex>(roots.begin(), roots.end())) <
          1e-8);
  }
}

TEST_CASE("general_eig: flags a defective matrix") {
  ComplexMatrix m(4); // single 2x2 Jordan block, twice
  m(0, 1) = 1.0;
  m(2, 3) = 1.0;
  const GeneralEig ge = general_eig(m);
  CHECK(ge.defective);
}

TEST_CASE("invert: exact small cases and the residual property") {
  CHECK(max_abs_diff(invert(ComplexMatrix::identity(4)), ComplexMatrix::identity(4)) == 0.0);

  ComplexMatrix d(4);
  d(0, 0) = 2.0;
  d(1, 1) = 4.0;
  d(2, 2) = 5.0;
  d(3, 3) = 10.0;
  const ComplexMatrix di = invert(d);
  CHECK(std::abs(di(0, 0) - Complex(0.5)) < 1e-15);
  CHECK(std::abs(di(1, 1) - Complex(0.25)) < 1e-15);
  CHECK(std::abs(di(2, 2) - Complex(0.2)) < 1e-15);
  CHECK(std::abs(di(3, 3) - Complex(0.1)) < 1e-15);

  Rand rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexMatrix m = rng.matrix_unit_disc(4) + ComplexMatrix::identity(4) * Complex(2.0);
    const ComplexMatrix mi = invert(m);
    CHECK(max_abs_diff(m * mi, ComplexMatrix::identity(4)) < tol::invert_residual);
  }
}

TEST_CASE("invert: rejects singular input") {
  ComplexMatrix m(4);
  m(0, 0) = 1.0; // rank 1
  CHECK_THROWS_AS(invert(m), SingularMatrix);
}

TEST_CASE("partial_trace_first: product, Bell and random pure states") {
  // |ud><ud| -> |d><d|
  ComplexVector ud(4);
  ud[1] = 1.0;
  ComplexMatrix rb = partial_trace_first(outer(ud, ud));
  CHECK(std::abs(rb(1, 1) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(rb(0, 0)) < 1e-15);

  ComplexVector bell(4);
  bell[1] = std::sqrt(0.5);
  bell[2] = std::sqrt(0.5);
  rb = partial_trace_first(outer(bell, bell));
  CHECK(max_abs_diff(rb, ComplexMatrix::identity(2) * Complex(0.5)) < 1e-15);

  Rand rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexVector psi = rng.unit_vector(4);
    const ComplexMatrix rho = outer(psi, psi);
    const ComplexMatrix red = partial_trace_first(rho);
    CHECK(std::abs(red.trace() - rho.trace()) < tol::trace_preserve);
    double purity = 0.0;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) purity += (red(r, c) * red(c, r)).real();
    CHECK(purity >= 0.5 - 1e-12);
    CHECK(purity <= 1.0 + 1e-12);
    // positivity of the reduced state
    const HermitianEig he = hermitian_eig(red);
    CHECK(he.evals.front() >= -tol::psd_slack);
  }
}

TEST_CASE("spectral_norm: known values") {
  ComplexMatrix d(4);
  d(0, 0) = 0.3;
  d(1, 1) = Complex(0.0, -0.9);
  d(2, 2) = 0.1;
  d(3, 3) = 0.0;
  CHECK(spectral_norm(d) == doctest::Approx(0.9).epsilon(1e-12));
}
