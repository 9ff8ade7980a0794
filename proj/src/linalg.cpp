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

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <string>

namespace purext {

namespace {

constexpr double kUlp = std::numeric_limits<double>::epsilon();

std::string matrix_to_string(const ComplexMatrix& m) {
  std::string out;
  char buf[96];
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) {
      std::snprintf(buf, sizeof(buf), " (%.17g,%.17g)", m(r, c).real(), m(r, c).imag());
      out += buf;
    }
    out += '\n';
  }
  return out;
}

double off_diagonal_frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Unitary plane rotation: [c, s; -conj(s), c] * [a; b] = [r; 0] with c real.
void make_givens(Complex a, Complex b, double& c, Complex& s) {
  const double bb = std::abs(b);
  if (bb == 0.0) {
    c = 1.0;
    s = 0.0;
    return;
  }
  const double aa = std::abs(a);
  if (aa == 0.0) {
    c = 0.0;
    s = std::conj(b) / bb;
    return;
  }
  const double h = std::hypot(aa, bb);
  c = aa / h;
  s = (a / aa) * std::conj(b) / h;
}

// Similarity A <- Q A Q^H and Z <- Z Q^H for the rotation above embedded in
// the (i1, i2) plane.
void apply_rotation(ComplexMatrix& a, ComplexMatrix& z, int i1, int i2, double c,
                    const Complex& s) {
  const int n = a.dim();
  for (int k = 0; k < n; ++k) {
    const Complex x = a(i1, k), y = a(i2, k);
    a(i1, k) = c * x + s * y;
    a(i2, k) = -std::conj(s) * x + c * y;
  }
  for (int k = 0; k < n; ++k) {
    const Complex x = a(k, i1), y = a(k, i2);
    a(k, i1) = c * x + std::conj(s) * y;
    a(k, i2) = -s * x + c * y;
  }
  for (int k = 0; k < n; ++k) {
    const Complex x = z(k, i1), y = z(k, i2);
    z(k, i1) = c * x + std::conj(s) * y;
    z(k, i2) = -s * x + c * y;
  }
}

// Diagonal powers-of-two similarity scaling (no permutations; the matrices
// here are tiny and already well ordered).
std::vector<double> balance(ComplexMatrix& a) {
  const int n = a.dim();
  std::vector<double> scale(static_cast<std::size_t>(n), 1.0);
  constexpr double radix = 2.0;
  bool again = true;
  while (again) {
    again = false;
    for (int i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        r += std::abs(a(i, j));
        c += std::abs(a(j, i));
      }
      if (r == 0.0 || c == 0.0) continue;
      double f = 1.0;
      const double s = c + r;
      double g = r / radix;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        again = true;
        scale[static_cast<std::size_t>(i)] *= f;
        const double gi = 1.0 / f;
        for (int j = 0; j < n; ++j) a(i, j) *= gi;
        for (int j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
  return scale;
}

// Eigenvalue of [[a, b], [c, d]] closer to d, in a cancellation-safe form.
Complex wilkinson_shift(const Complex& a, const Complex& b, const Complex& c,
                        const Complex& d) {
  const Complex p = 0.5 * (a - d);
  const Complex bc = b * c;
  const Complex q = std::sqrt(p * p + bc);
  const Complex den1 = p + q, den2 = p - q;
  const Complex den = (std::abs(den1) >= std::abs(den2)) ? den1 : den2;
  if (std::abs(den) == 0.0) return d;
  return d - bc / den;
}

} // namespace

HermitianEig hermitian_eig(const ComplexMatrix& m) {
  const int n = m.dim();
  if (!m.finite()) throw NotHermitian("hermitian_eig: non-finite entries");
  if (m.hermiticity_defect() > tol::hermiticity)
    throw NotHermitian("hermitian_eig: input not Hermitian within tolerance\n" +
                       matrix_to_string(m));

  // Work on the exactly Hermitian average; rotations then preserve the
  // structure and the diagonal stays real.
  ComplexMatrix a(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));

  ComplexMatrix w = ComplexMatrix::identity(n);
  const double target = tol::jacobi_off_norm * std::max(1.0, a.frobenius());

  bool converged = false;
  for (int sweep = 0; sweep < tol::jacobi_max_sweeps; ++sweep) {
    if (off_diagonal_frobenius(a) <= target) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double b = std::abs(apq);
        if (b == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const Complex phase = apq / b; // e^{i alpha}
        const double tau = (aqq - app) / (2.0 * b);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex spe = s * phase;            // s e^{i alpha}
        const Complex spc = s * std::conj(phase); // s e^{-i alpha}

        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - spc * akq;
          a(k, q) = spe * akp + c * akq;
          a(p, k) = std::conj(a(k, p));
          a(q, k) = std::conj(a(k, q));
        }
        a(p, p) = app - t * b;
        a(q, q) = aqq + t * b;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const Complex wkp = w(k, p), wkq = w(k, q);
          w(k, p) = c * wkp - spc * wkq;
          w(k, q) = spe * wkp + c * wkq;
        }
      }
    }
  }
  if (!converged && off_diagonal_frobenius(a) > target)
    throw NoConvergence("hermitian_eig: Jacobi sweep cap reached\n" + matrix_to_string(m));

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEig out;
  out.evals.resize(static_cast<std::size_t>(n));
  out.vecs = ComplexMatrix(n);
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    out.evals[static_cast<std::size_t>(k)] = a(src, src).real();
    for (int r = 0; r < n; ++r) out.vecs(r, k) = w(r, src);
  }
  return out;
}

ComplexMatrix unitary_propagator(const ComplexMatrix& h, double tau) {
  const HermitianEig he = hermitian_eig(h);
  const int n = h.dim();
  std::vector<Complex> ph(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    ph[static_cast<std::size_t>(k)] =
        std::polar(1.0, -he.evals[static_cast<std::size_t>(k)] * tau);
  ComplexMatrix u(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Complex s = 0.0;
      for (int k = 0; k < n; ++k)
        s += he.vecs(r, k) * ph[static_cast<std::size_t>(k)] * std::conj(he.vecs(c, k));
      u(r, c) = s;
    }
  }
  return u;
}

GeneralEig general_eig(const ComplexMatrix& m) {
  assert(m.dim() == 4 && "general_eig: effective operators are 4x4");
  const int n = m.dim();
  if (!m.finite()) throw Error("general_eig: non-finite entries");

  ComplexMatrix a = m;
  const std::vector<double> scale = balance(a);
  ComplexMatrix z = ComplexMatrix::identity(n);

  // Givens reduction to upper Hessenberg.
  for (int k = 0; k + 2 < n; ++k) {
    for (int i = k + 2; i < n; ++i) {
      if (std::abs(a(i, k)) == 0.0) continue;
      double c;
      Complex s;
      make_givens(a(k + 1, k), a(i, k), c, s);
      apply_rotation(a, z, k + 1, i, c, s);
      a(i, k) = 0.0;
    }
  }

  const double fro = std::max(a.frobenius(), std::numeric_limits<double>::min());
  auto negligible = [&](int i) {
    const double bound = std::abs(a(i, i)) + std::abs(a(i - 1, i - 1));
    return std::abs(a(i, i - 1)) <= kUlp * (bound > 0.0 ? bound : fro);
  };

  int hi = n - 1;
  int iter = 0, iter_block = 0;
  const int iter_max = tol::qr_max_iter_per_eval * n;
  while (hi > 0) {
    for (int i = hi; i >= 1; --i)
      if (negligible(i)) a(i, i - 1) = 0.0;
    if (std::abs(a(hi, hi - 1)) == 0.0) {
      --hi;
      iter_block = 0;
      continue;
    }
    int lo = hi;
    while (lo > 0 && std::abs(a(lo, lo - 1)) != 0.0) --lo;
    if (++iter > iter_max)
      throw NoConvergence("general_eig: QR iteration cap reached\n" + matrix_to_string(m));

    Complex sigma;
    if (++iter_block % 11 == 0) {
      sigma = a(hi, hi) + 0.75 * std::abs(a(hi, hi - 1)); // exceptional shift
    } else {
      sigma = wilkinson_shift(a(hi - 1, hi - 1), a(hi - 1, hi), a(hi, hi - 1), a(hi, hi));
    }

    Complex x = a(lo, lo) - sigma;
    Complex y = a(lo + 1, lo);
    for (int i = lo; i < hi; ++i) {
      double c;
      Complex s;
      make_givens(x, y, c, s);
      apply_rotation(a, z, i, i + 1, c, s);
      if (i + 2 <= hi) {
        x = a(i + 1, i);
        y = a(i + 2, i);
      }
    }
  }

  GeneralEig out;
  out.evals.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out.evals[static_cast<std::size_t>(k)] = a(k, k);

  // Right eigenvectors of the triangular factor by back-substitution,
  // transformed back through the Schur basis and the balancing.
  const double smallnum = kUlp * std::max(fro, 1.0);
  out.right_vecs = ComplexMatrix(n);
  for (int k = 0; k < n; ++k) {
    std::vector<Complex> y(static_cast<std::size_t>(n), Complex(0.0));
    y[static_cast<std::size_t>(k)] = 1.0;
    for (int j = k - 1; j >= 0; --j) {
      Complex rhs = 0.0;
      for (int l = j + 1; l <= k; ++l) rhs += a(j, l) * y[static_cast<std::size_t>(l)];
      Complex d = a(j, j) - a(k, k);
      if (std::abs(d) < smallnum) d = Complex(smallnum, 0.0);
      y[static_cast<std::size_t>(j)] = -rhs / d;
    }
    ComplexVector v(n);
    for (int r = 0; r < n; ++r) {
      Complex s = 0.0;
      for (int l = 0; l <= k; ++l) s += z(r, l) * y[static_cast<std::size_t>(l)];
      v[r] = s * scale[static_cast<std::size_t>(r)];
    }
    v = v.normalized();
    for (int r = 0; r < n; ++r) out.right_vecs(r, k) = v[r];
  }

  ComplexMatrix inv;
  double cond = std::numeric_limits<double>::infinity();
  if (try_invert(out.right_vecs, inv, cond)) {
    out.evec_condition = cond;
    out.defective = cond > tol::defective_cond;
  } else {
    out.evec_condition = cond;
    out.defective = true;
  }
  return out;
}

bool try_invert(const ComplexMatrix& m, ComplexMatrix& out, double& cond) {
  const int n = m.dim();
  ComplexMatrix a = m;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(a(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(a(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) {
      cond = std::numeric_limits<double>::infinity();
      return false;
    }
    if (piv != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a(col, c), a(piv, c));
        std::swap(inv(col, c), inv(piv, c));
      }
    }
    const Complex d = a(col, col);
    for (int c = 0; c < n; ++c) {
      a(col, c) /= d;
      inv(col, c) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = a(r, col);
      if (f == Complex(0.0)) continue;
      for (int c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  auto inf_norm = [](const ComplexMatrix& x) {
    double best = 0.0;
    for (int r = 0; r < x.dim(); ++r) {
      double s = 0.0;
      for (int c = 0; c < x.dim(); ++c) s += std::abs(x(r, c));
      best = std::max(best, s);
    }
    return best;
  };
  cond = inf_norm(m) * inf_norm(inv);
  out = inv;
  return true;
}

ComplexMatrix invert(const ComplexMatrix& m) {
  ComplexMatrix out;
  double cond = 0.0;
  if (!try_invert(m, out, cond))
    throw SingularMatrix("invert: zero pivot\n" + matrix_to_string(m));
  if (!(cond <= tol::invert_cond_max))
    throw SingularMatrix("invert: condition estimate " + std::to_string(cond) +
                         " exceeds limit");
  return out;
}

ComplexMatrix partial_trace_first(const ComplexMatrix& rho) {
  assert(rho.dim() == 4 && "partial_trace_first: expects a two-qubit state");
  ComplexMatrix out(2);
  for (int s = 0; s < 2; ++s)
    for (int sp = 0; sp < 2; ++sp) out(s, sp) = rho(s, sp) + rho(2 + s, 2 + sp);
  return out;
}

double spectral_norm(const ComplexMatrix& m) {
  const HermitianEig he = hermitian_eig(m.adjoint() * m);
  const double top = he.evals.empty() ? 0.0 : he.evals.back();
  return std::sqrt(std::max(0.0, top));
}

} // namespace purext
