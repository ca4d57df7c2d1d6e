// Copyright 2026 The Puribound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PURIBOUND_MATRIX_HPP
#define PURIBOUND_MATRIX_HPP

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace puribound {

using Complex = std::complex<double>;

/// Reported when an iterative numerical routine fails to converge or a
/// bracketing assumption is violated.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Dense N x N complex matrix, row-major, value semantics.
template <int N>
struct CMat {
  std::array<Complex, static_cast<std::size_t>(N) * N> a{};

  Complex& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * N + c]; }
  const Complex& operator()(int r, int c) const {
    return a[static_cast<std::size_t>(r) * N + c];
  }

  static CMat identity() {
    CMat m;
    for (int i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  CMat adjoint() const {
    CMat m;
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
  }

  CMat conjugate() const {
    CMat m;
    for (std::size_t i = 0; i < a.size(); ++i) m.a[i] = std::conj(a[i]);
    return m;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (int i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  friend CMat operator*(const CMat& x, const CMat& y) {
    CMat m;
    for (int r = 0; r < N; ++r)
      for (int k = 0; k < N; ++k) {
        const Complex xv = x(r, k);
        if (xv == Complex{}) continue;
        for (int c = 0; c < N; ++c) m(r, c) += xv * y(k, c);
      }
    return m;
  }

  friend CMat operator+(const CMat& x, const CMat& y) {
    CMat m;
    for (std::size_t i = 0; i < x.a.size(); ++i) m.a[i] = x.a[i] + y.a[i];
    return m;
  }

  friend CMat operator-(const CMat& x, const CMat& y) {
    CMat m;
    for (std::size_t i = 0; i < x.a.size(); ++i) m.a[i] = x.a[i] - y.a[i];
    return m;
  }

  friend CMat operator*(double s, const CMat& x) {
    CMat m;
    for (std::size_t i = 0; i < x.a.size(); ++i) m.a[i] = s * x.a[i];
    return m;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : a) m = std::max(m, std::abs(v));
    return m;
  }
};

using Mat2 = CMat<2>;
using Mat4 = CMat<4>;
using Mat16 = CMat<16>;

template <int N, int M>
CMat<N * M> kron(const CMat<N>& x, const CMat<M>& y) {
  CMat<N * M> m;
  for (int r1 = 0; r1 < N; ++r1)
    for (int c1 = 0; c1 < N; ++c1)
      for (int r2 = 0; r2 < M; ++r2)
        for (int c2 = 0; c2 < M; ++c2)
          m(r1 * M + r2, c1 * M + c2) = x(r1, c1) * y(r2, c2);
  return m;
}

template <int N>
struct EighResult {
  std::array<double, N> values;  // ascending
  CMat<N> vectors;               // columns are eigenvectors
  int sweeps = 0;
};

/// Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi
/// rotations. Deterministic sweep order; converges quadratically for the
/// tiny dimensions used here.
template <int N>
EighResult<N> eigh(const CMat<N>& h, double tol = 1e-13, int max_sweeps = 100) {
  CMat<N> a = h;
  CMat<N> v = CMat<N>::identity();
  int sweeps = 0;
  for (; sweeps < max_sweeps; ++sweeps) {
    double off = 0.0;
    for (int p = 0; p < N; ++p)
      for (int q = p + 1; q < N; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= tol) break;
    for (int p = 0; p < N; ++p) {
      for (int q = p + 1; q < N; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= tol * 1e-3) continue;
        // Phase factor reducing the pivot to a real problem, then a
        // standard Jacobi rotation angle.
        const Complex phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex gp = s * phase;  // G(p,q) entry of the 2x2 rotation
        // Columns: A <- A G, with G = [[c, gp], [-conj(gp), c]] acting on (p,q).
        for (int r = 0; r < N; ++r) {
          const Complex arp = a(r, p);
          const Complex arq = a(r, q);
          a(r, p) = c * arp - std::conj(gp) * arq;
          a(r, q) = gp * arp + c * arq;
        }
        // Rows: A <- G^dagger A.
        for (int cidx = 0; cidx < N; ++cidx) {
          const Complex apc = a(p, cidx);
          const Complex aqc = a(q, cidx);
          a(p, cidx) = c * apc - gp * aqc;
          a(q, cidx) = std::conj(gp) * apc + c * aqc;
        }
        for (int r = 0; r < N; ++r) {
          const Complex vrp = v(r, p);
          const Complex vrq = v(r, q);
          v(r, p) = c * vrp - std::conj(gp) * vrq;
          v(r, q) = gp * vrp + c * vrq;
        }
      }
    }
  }
  if (sweeps >= max_sweeps) {
    throw SolverError("Jacobi eigensolver did not converge after " +
                      std::to_string(max_sweeps) + " sweeps");
  }
  EighResult<N> res;
  for (int i = 0; i < N; ++i) res.values[static_cast<std::size_t>(i)] = a(i, i).real();
  res.vectors = v;
  res.sweeps = sweeps;
  // Deterministic ascending order (selection sort on the tiny dimension).
  for (int i = 0; i < N; ++i) {
    int best = i;
    for (int j = i + 1; j < N; ++j)
      if (res.values[static_cast<std::size_t>(j)] < res.values[static_cast<std::size_t>(best)]) best = j;
    if (best != i) {
      std::swap(res.values[static_cast<std::size_t>(i)], res.values[static_cast<std::size_t>(best)]);
      for (int r = 0; r < N; ++r) std::swap(res.vectors(r, i), res.vectors(r, best));
    }
  }
  return res;
}

/// Principal square root of a Hermitian positive semidefinite matrix.
/// Eigenvalues within -1e-12 of zero are clamped.
template <int N>
CMat<N> sqrt_psd(const CMat<N>& h) {
  const auto e = eigh(h);
  CMat<N> m;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      Complex sum = 0.0;
      for (int k = 0; k < N; ++k) {
        const double lam = std::max(0.0, e.values[static_cast<std::size_t>(k)]);
        sum += e.vectors(r, k) * std::sqrt(lam) * std::conj(e.vectors(c, k));
      }
      m(r, c) = sum;
    }
  return m;
}

}  // namespace puribound

#endif  // PURIBOUND_MATRIX_HPP
