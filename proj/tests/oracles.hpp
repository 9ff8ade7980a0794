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

// Test-only reference implementations, kept independent of the library's
// solver paths on purpose: a scaling-and-squaring Taylor propagator, a
// characteristic-polynomial quartic root finder, and seeded random input
// generators.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "purext/types.hpp"

namespace purext::testing {

/// exp(-i h tau) by scaling-and-squaring of the plain Taylor series.
inline ComplexMatrix expm_taylor(const ComplexMatrix& h, double tau) {
  const int n = h.dim();
  ComplexMatrix a = h * Complex(0.0, -tau);
  double norm = 0.0;
  for (int r = 0; r < n; ++r) {
    double row = 0.0;
    for (int c = 0; c < n; ++c) row += std::abs(a(r, c));
    norm = std::max(norm, row);
  }
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  a = a * Complex(scale);

  ComplexMatrix result = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= 60; ++k) {
    term = term * a * Complex(1.0 / k);
    result = result + term;
    if (term.max_abs() < 1e-20) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

/// Coefficients of det(lambda I - A) for 4x4 A (Faddeev-LeVerrier):
/// lambda^4 + c[3] lambda^3 + c[2] lambda^2 + c[1] lambda + c[0].
inline std::array<Complex, 4> char_poly_4(const ComplexMatrix& a) {
  const ComplexMatrix i4 = ComplexMatrix::identity(4);
  std::array<Complex, 4> c{};
  ComplexMatrix m = a;
  c[3] = -m.trace();
  m = a * (m + i4 * c[3]);
  c[2] = -m.trace() * Complex(0.5);
  m = a * (m + i4 * c[2]);
  c[1] = -m.trace() * Complex(1.0 / 3.0);
  m = a * (m + i4 * c[1]);
  c[0] = -m.trace() * Complex(0.25);
  return c;
}

/// Durand-Kerner roots of the monic quartic with the coefficients above.
inline std::array<Complex, 4> quartic_roots(const std::array<Complex, 4>& c) {
  auto eval = [&](Complex z) {
    return ((((z + c[3]) * z + c[2]) * z + c[1]) * z) + c[0];
  };
  std::array<Complex, 4> z;
  const Complex seed(0.4, 0.9);
  z[0] = seed;
  for (int i = 1; i < 4; ++i) z[i] = z[i - 1] * seed;
  for (int iter = 0; iter < 500; ++iter) {
    double moved = 0.0;
    for (int i = 0; i < 4; ++i) {
      Complex denom = 1.0;
      for (int j = 0; j < 4; ++j)
        if (j != i) denom *= z[i] - z[j];
      const Complex step = eval(z[i]) / denom;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-15) break;
  }
  return z;
}

/// Greedy matching distance between two eigenvalue multisets.
inline double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  double worst = 0.0;
  while (!a.empty()) {
    std::size_t bi = 0, bj = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        const double d = std::abs(a[i] - b[j]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    worst = std::max(worst, best);
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(bi));
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(bj));
  }
  return worst;
}

class Rand {
 public:
  explicit Rand(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }

  Complex unit_disc() {
    for (;;) {
      const Complex z(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
      if (std::abs(z) <= 1.0) return z;
    }
  }

  ComplexMatrix matrix_unit_disc(int n) {
    ComplexMatrix m(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = unit_disc();
    return m;
  }

  ComplexMatrix hermitian(int n, double scale = 1.0) {
    ComplexMatrix m(n);
    for (int r = 0; r < n; ++r) {
      m(r, r) = uniform(-scale, scale);
      for (int c = r + 1; c < n; ++c) {
        const Complex z(uniform(-scale, scale), uniform(-scale, scale));
        m(r, c) = z;
        m(c, r) = std::conj(z);
      }
    }
    return m;
  }

  ComplexVector unit_vector(int n) {
    ComplexVector v(n);
    double nrm = 0.0;
    while (nrm < 1e-3) {
      for (int i = 0; i < n; ++i) v[i] = Complex(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
      nrm = v.norm();
    }
    return v.normalized();
  }

 private:
  std::mt19937_64 gen_;
};

} // namespace purext::testing
