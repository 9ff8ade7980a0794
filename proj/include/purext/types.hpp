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

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace purext {

inline constexpr const char* kVersion = "0.1.0";

using Complex = std::complex<double>;

/// Central tolerance record. Every operation and every test reads these
/// constants, so the contracts stay in one place.
namespace tol {
inline constexpr double hermiticity = 1e-12;         // max |m - m^dag| accepted as Hermitian
inline constexpr double eig_reconstruct = 1e-10;     // Hermitian eigendecomposition residual
inline constexpr double unitarity = 1e-12;           // max |U^dag U - I|
inline constexpr double general_eig_residual = 1e-9; // per-pair |M r - lambda r|
inline constexpr double invert_residual = 1e-9;      // max |m m^-1 - I|
inline constexpr double invert_cond_max = 1e10;      // inversion refused above this
inline constexpr double defective_cond = 1e8;        // eigenvector matrix condition flag
inline constexpr double gap_tol = 1e-9;              // |l1| - |l2| below this => degenerate top
inline constexpr double biorthonormal = 1e-9;        // max |<l~_i|l_j> - delta_ij|
inline constexpr double contraction_slack = 1e-10;   // largest singular value of V <= 1 + this
inline constexpr double norm_check = 1e-8;           // state normalization acceptance
inline constexpr double trace_preserve = 1e-12;
inline constexpr double psd_slack = 1e-10;           // min eigenvalue >= -this for density inputs
inline constexpr double zero_probability = 1e-300;   // protocol extinct below this
inline constexpr double diff_none = 0.01;            // |d| below: class "none"
inline constexpr double diff_large = 0.1;            // |d| at or above: class "large"
inline constexpr int jacobi_max_sweeps = 100;
inline constexpr double jacobi_off_norm = 1e-14;     // relative to the Frobenius norm
inline constexpr int qr_max_iter_per_eval = 30;
} // namespace tol

/// cos(pi*x) with exact values at half-integer x, so that phases like
/// phi = pi/2 produce exactly zero real couplings.
inline double cos_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  if (r == 0.0) return 1.0;
  if (r == 0.5 || r == 1.5) return 0.0;
  if (r == 1.0) return -1.0;
  return std::cos(r * M_PI);
}

/// sin(pi*x) with exact values at half-integer x.
inline double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == 1.5) return -1.0;
  return std::sin(r * M_PI);
}

class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(int dim) : entries_(static_cast<std::size_t>(dim)) {}
  ComplexVector(std::initializer_list<Complex> init) : entries_(init) {}

  int dim() const { return static_cast<int>(entries_.size()); }
  Complex& operator[](int i) { return entries_[static_cast<std::size_t>(i)]; }
  const Complex& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }

  double norm() const {
    double s = 0.0;
    for (const Complex& z : entries_) s += std::norm(z);
    return std::sqrt(s);
  }

  ComplexVector normalized() const {
    ComplexVector out = *this;
    double n = norm();
    if (n > 0.0) {
      for (Complex& z : out.entries_) z /= n;
    }
    return out;
  }

  bool finite() const {
    for (const Complex& z : entries_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
  }

  std::vector<Complex>& data() { return entries_; }
  const std::vector<Complex>& data() const { return entries_; }

 private:
  std::vector<Complex> entries_;
};

/// <a|b>: conjugate-linear in the first argument.
inline Complex inner(const ComplexVector& a, const ComplexVector& b) {
  Complex s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

/// Dense square complex matrix, row-major. The only numeric carrier in
/// this project; dimensions are 2, 4 or 8 everywhere.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim)
      : dim_(dim), entries_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {}

  static ComplexMatrix identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  int dim() const { return dim_; }

  Complex& operator()(int r, int c) {
    return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) +
                    static_cast<std::size_t>(c)];
  }
  const Complex& operator()(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) +
                    static_cast<std::size_t>(c)];
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  ComplexMatrix operator*(const ComplexMatrix& rhs) const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r) {
      for (int k = 0; k < dim_; ++k) {
        const Complex a = (*this)(r, k);
        if (a == Complex(0.0, 0.0)) continue;
        for (int c = 0; c < dim_; ++c) out(r, c) += a * rhs(k, c);
      }
    }
    return out;
  }

  ComplexVector operator*(const ComplexVector& v) const {
    ComplexVector out(dim_);
    for (int r = 0; r < dim_; ++r) {
      Complex s = 0.0;
      for (int c = 0; c < dim_; ++c) s += (*this)(r, c) * v[c];
      out[r] = s;
    }
    return out;
  }

  ComplexMatrix operator+(const ComplexMatrix& rhs) const {
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
  }

  ComplexMatrix operator-(const ComplexMatrix& rhs) const {
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
  }

  ComplexMatrix operator*(Complex s) const {
    ComplexMatrix out = *this;
    for (Complex& z : out.entries_) z *= s;
    return out;
  }

  Complex trace() const {
    Complex s = 0.0;
    for (int i = 0; i < dim_; ++i) s += (*this)(i, i);
    return s;
  }

  double max_abs() const {
    double m = 0.0;
    for (const Complex& z : entries_) m = std::max(m, std::abs(z));
    return m;
  }

  double frobenius() const {
    double s = 0.0;
    for (const Complex& z : entries_) s += std::norm(z);
    return std::sqrt(s);
  }

  /// max-entry |m - m^dag|
  double hermiticity_defect() const {
    double d = 0.0;
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c)
        d = std::max(d, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return d;
  }

  bool finite() const {
    for (const Complex& z : entries_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
  }

  std::vector<Complex>& data() { return entries_; }
  const std::vector<Complex>& data() const { return entries_; }

 private:
  int dim_ = 0;
  std::vector<Complex> entries_;
};

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double d = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) d = std::max(d, std::abs(a(r, c) - b(r, c)));
  return d;
}

/// |a><b|
inline ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b) {
  ComplexMatrix m(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < b.dim(); ++c) m(r, c) = a[r] * std::conj(b[c]);
  return m;
}

} // namespace purext
