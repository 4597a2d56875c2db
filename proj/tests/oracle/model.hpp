// Copyright 2026 The npk Authors
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

#pragma once

// Independent reference implementation used by the tests. Plain nested loops
// over dense arrays, written from the defining formulas, sharing no code with
// the library beyond the Scalar accessors used to import data.

#include <gmpxx.h>

#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

#include "npk/hermitian.hpp"

namespace oracle {

// a + b*sqrt(3)
struct Q3 {
  mpq_class a = 0;
  mpq_class b = 0;
  Q3() = default;
  Q3(long v) : a(v) {}  // NOLINT
  Q3(mpq_class x, mpq_class y) : a(std::move(x)), b(std::move(y)) {}
  friend Q3 operator+(const Q3& x, const Q3& y) { return {x.a + y.a, x.b + y.b}; }
  friend Q3 operator-(const Q3& x, const Q3& y) { return {x.a - y.a, x.b - y.b}; }
  friend Q3 operator-(const Q3& x) { return {-x.a, -x.b}; }
  friend Q3 operator*(const Q3& x, const Q3& y) {
    return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend Q3 operator/(const Q3& x, const Q3& y) {
    const mpq_class norm = y.a * y.a - 3 * y.b * y.b;
    if (norm == 0) throw std::domain_error("oracle: division by zero");
    const Q3 conj{y.a, -y.b};
    const Q3 p = x * conj;
    return {p.a / norm, p.b / norm};
  }
  friend bool operator==(const Q3& x, const Q3& y) { return x.a == y.a && x.b == y.b; }
  bool is_zero() const { return a == 0 && b == 0; }
  double to_double() const { return a.get_d() + b.get_d() * 1.7320508075688772; }
};

inline bool is_zero(const Q3& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

template <class T>
struct Model {
  using Vec = std::vector<T>;
  std::size_t n = 0;
  std::vector<T> c;  // c[(i*n + j)*n + k] = coefficient of e_k in [e_i, e_j]
  std::vector<T> G;  // row-major Gram matrix
  std::vector<T> J;  // row-major, column j = J e_j

  T& C(std::size_t i, std::size_t j, std::size_t k) { return c[(i * n + j) * n + k]; }
  const T& C(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * n + j) * n + k]; }

  Vec e(std::size_t i) const {
    Vec v(n, T(0));
    v[i] = T(1);
    return v;
  }
  Vec add(const Vec& x, const Vec& y) const {
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = x[i] + y[i];
    return r;
  }
  Vec sub(const Vec& x, const Vec& y) const {
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = x[i] - y[i];
    return r;
  }
  Vec scale(const T& s, const Vec& x) const {
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = s * x[i];
    return r;
  }
  Vec br(const Vec& x, const Vec& y) const {
    Vec r(n, T(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(y[j])) continue;
        const T xy = x[i] * y[j];
        for (std::size_t k = 0; k < n; ++k) r[k] = r[k] + xy * C(i, j, k);
      }
    }
    return r;
  }
  Vec Jx(const Vec& x) const {
    Vec r(n, T(0));
    for (std::size_t row = 0; row < n; ++row)
      for (std::size_t col = 0; col < n; ++col) r[row] = r[row] + J[row * n + col] * x[col];
    return r;
  }
  T g(const Vec& x, const Vec& y) const {
    T s(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s = s + x[i] * G[i * n + j] * y[j];
    return s;
  }
  T w(const Vec& x, const Vec& y) const { return g(Jx(x), y); }

  Vec N(const Vec& x, const Vec& y) const {
    const Vec jx = Jx(x), jy = Jx(y);
    return sub(add(add(Jx(br(jx, y)), Jx(br(x, jy))), br(x, y)), br(jx, jy));
  }
  T dw(const Vec& x, const Vec& y, const Vec& z) const {
    return -w(br(x, y), z) - w(br(y, z), x) - w(br(z, x), y);
  }
  T psi(const Vec& x, const Vec& y, const Vec& z) const {
    return w(N(x, y), z) + dw(x, Jx(y), Jx(z));
  }

  std::vector<T> gram_inverse() const {
    std::vector<T> a = G, inv(n * n, T(0));
    for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = T(1);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t p = col;
      while (p < n && is_zero(a[p * n + col])) ++p;
      if (p == n) throw std::domain_error("oracle: singular Gram matrix");
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a[p * n + k], a[col * n + k]);
        std::swap(inv[p * n + k], inv[col * n + k]);
      }
      const T piv = a[col * n + col];
      for (std::size_t k = 0; k < n; ++k) {
        a[col * n + k] = a[col * n + k] / piv;
        inv[col * n + k] = inv[col * n + k] / piv;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || is_zero(a[r * n + col])) continue;
        const T f = a[r * n + col];
        for (std::size_t k = 0; k < n; ++k) {
          a[r * n + k] = a[r * n + k] - f * a[col * n + k];
          inv[r * n + k] = inv[r * n + k] - f * inv[col * n + k];
        }
      }
    }
    return inv;
  }

  // Koszul formula for left-invariant fields, solved directly for nabla_x y.
  Vec nabla(const Vec& x, const Vec& y, const std::vector<T>& ginv) const {
    Vec rhs(n);
    const Vec xy = br(x, y);
    for (std::size_t k = 0; k < n; ++k) {
      const Vec ek = e(k);
      rhs[k] = (g(xy, ek) - g(br(x, ek), y) - g(br(y, ek), x)) / T(2);
    }
    Vec v(n, T(0));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) v[r] = v[r] + ginv[r * n + k] * rhs[k];
    return v;
  }
  Vec nablaJ(const Vec& x, const Vec& y, const std::vector<T>& ginv) const {
    return sub(nabla(x, Jx(y), ginv), Jx(nabla(x, y, ginv)));
  }
};

inline Q3 to_q3(const npk::Scalar& s) { return {s.rational_part(), s.surd_part()}; }
inline double to_f(const npk::Scalar& s) { return s.to_double(); }

template <class T, class Conv>
Model<T> import(const npk::PseudoHermitianStructure& s, Conv conv) {
  Model<T> m;
  m.n = s.dim();
  const auto& a = s.algebra();
  m.c.resize(m.n * m.n * m.n);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j)
      for (std::size_t k = 0; k < m.n; ++k) m.C(i, j, k) = conv(a.constant(i, j, k));
  m.G.resize(m.n * m.n);
  m.J.resize(m.n * m.n);
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) {
      m.G[i * m.n + j] = conv(s.metric().gram()(i, j));
      m.J[i * m.n + j] = conv(s.jstruct().matrix()(i, j));
    }
  }
  return m;
}

// The six-dimensional example written out from its defining tables:
// [X1,X2] = 2X3, [X1,X3] = 2X2, [X2,X3] = -2X1 on each factor,
// J E_i = (2F_i + E_i)/sqrt3, J F_i = -(2E_i + F_i)/sqrt3,
// g(E_i,F_i) = -1/3, 1/3 (i = 3), g(E_i,E_i) = g(F_i,F_i) = 2/3, -2/3 (i = 3).
inline Model<Q3> example_model() {
  Model<Q3> m;
  m.n = 6;
  m.c.assign(216, Q3(0));
  for (std::size_t off : {0u, 3u}) {
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, long v) {
      m.C(off + i, off + j, off + k) = Q3(v);
      m.C(off + j, off + i, off + k) = Q3(-v);
    };
    set(0, 1, 2, 2);
    set(0, 2, 1, 2);
    set(1, 2, 0, -2);
  }
  const Q3 inv_sqrt3{0, mpq_class(1, 3)};
  m.J.assign(36, Q3(0));
  m.G.assign(36, Q3(0));
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t E = i, F = 3 + i;
    // J E_i: column E
    m.J[E * 6 + E] = inv_sqrt3;
    m.J[F * 6 + E] = Q3(2) * inv_sqrt3;
    // J F_i: column F
    m.J[E * 6 + F] = -(Q3(2) * inv_sqrt3);
    m.J[F * 6 + F] = -inv_sqrt3;
    const long sign = i == 2 ? -1 : 1;
    m.G[E * 6 + E] = Q3(mpq_class(2 * sign, 3), 0);
    m.G[F * 6 + F] = Q3(mpq_class(2 * sign, 3), 0);
    m.G[E * 6 + F] = m.G[F * 6 + E] = Q3(mpq_class(-sign, 3), 0);
  }
  return m;
}

}  // namespace oracle
