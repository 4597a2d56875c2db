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

#include "npk/tensor_calculus.hpp"

#include <algorithm>
#include <cmath>

#include "npk/errors.hpp"

namespace npk {
namespace {

void require_dim(const PseudoHermitianStructure& s, const Vector& v, const char* what) {
  if (v.size() != s.dim()) {
    throw DimensionError(std::string(what) + ": vector must have dimension " +
                         std::to_string(s.dim()));
  }
}

}  // namespace

Vector nijenhuis(const PseudoHermitianStructure& s, const Vector& x, const Vector& y) {
  require_dim(s, x, "nijenhuis");
  require_dim(s, y, "nijenhuis");
  const LieAlgebra& a = s.algebra();
  const Vector jx = s.J(x);
  const Vector jy = s.J(y);
  Vector n = s.J(bracket(a, jx, y) + bracket(a, x, jy));
  n += bracket(a, x, y);
  n -= bracket(a, jx, jy);
  return n;
}

Scalar d_omega(const PseudoHermitianStructure& s, const Vector& x, const Vector& y,
               const Vector& z) {
  require_dim(s, x, "d_omega");
  require_dim(s, y, "d_omega");
  require_dim(s, z, "d_omega");
  const LieAlgebra& a = s.algebra();
  return -s.w(bracket(a, x, y), z) - s.w(bracket(a, y, z), x) - s.w(bracket(a, z, x), y);
}

Scalar psi(const PseudoHermitianStructure& s, const Vector& x, const Vector& y, const Vector& z) {
  return s.w(nijenhuis(s, x, y), z) + d_omega(s, x, s.J(y), s.J(z));
}

ConnectionTable::ConnectionTable(std::size_t n, std::vector<Vector> entries, double scale)
    : n_(n), entries_(std::move(entries)), scale_(scale) {
  if (entries_.size() != n * n) throw DimensionError("connection table needs n^2 entries");
}

Vector ConnectionTable::covariant(const Vector& x, const Vector& y) const {
  if (x.size() != n_ || y.size() != n_) throw DimensionError("covariant: dimension mismatch");
  if (n_ == 0) return Vector();
  Vector out(std::vector<Scalar>(n_, x[0] - x[0]));
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (!y[j].is_zero()) out.axpy(x[i] * y[j], (*this)(i, j));
    }
  }
  return out;
}

ConnectionTable levi_civita(const LieAlgebra& a, const BilinearForm& metric) {
  const std::size_t n = a.dim();
  if (metric.dim() != n) throw DimensionError("levi_civita: metric dimension mismatch");
  const Field& f = a.field();
  const Matrix& g = metric.gram();
  const Matrix ginv = inverse(g);  // throws on a singular Gram matrix
  const Scalar half = f.from_rational(Rational(1, 2));

  // gb[i*n + j] = G [e_i, e_j], i.e. component k is g([e_i, e_j], e_k).
  std::vector<Vector> gb(n * n, Vector::zeros(f, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : a.bracket_terms(i, j)) {
        for (std::size_t k = 0; k < n; ++k) {
          if (!g(k, t.k).is_zero()) gb[i * n + j][k] += t.coeff * g(k, t.k);
        }
      }
    }
  }

  std::vector<Vector> entries;
  entries.reserve(n * n);
  Vector rhs = Vector::zeros(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        rhs[k] = half * (gb[i * n + j][k] - gb[i * n + k][j] - gb[j * n + k][i]);
      }
      entries.push_back(ginv * rhs);
    }
  }
  const double scale = std::max(1.0, a.constant_scale()) * std::max(1.0, max_abs_double(g)) *
                       std::max(1.0, max_abs_double(ginv));
  return ConnectionTable(n, std::move(entries), scale);
}

Defect torsion_defect(const ConnectionTable& gamma, const LieAlgebra& a) {
  const std::size_t n = a.dim();
  Defect d = Defect::zero(a.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d.consider(gamma(i, j) - gamma(j, i) - a.basis_bracket(i, j), {i, j});
    }
  }
  d.scale = gamma.scale();
  return d;
}

Defect metric_compatibility_defect(const ConnectionTable& gamma, const BilinearForm& metric) {
  const std::size_t n = metric.dim();
  const Matrix& g = metric.gram();
  Defect d = Defect::zero(Field());
  if (n == 0) return d;
  d = Defect{g(0, 0) - g(0, 0), {}, g(0, 0) - g(0, 0), {}, 1.0};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector gj = g * gamma(i, j);  // component k: g(nabla_i e_j, e_k)
      for (std::size_t k = j; k < n; ++k) {
        const Vector gk = k == j ? gj : g * gamma(i, k);
        d.consider(gj[k] + gk[j], {i, j, k});
      }
    }
  }
  d.scale = gamma.scale() * std::max(1.0, max_abs_double(g));
  return d;
}

Vector nabla_J(const PseudoHermitianStructure& s, const ConnectionTable& gamma, const Vector& x,
               const Vector& y) {
  require_dim(s, x, "nabla_J");
  require_dim(s, y, "nabla_J");
  return gamma.covariant(x, s.J(y)) - s.J(gamma.covariant(x, y));
}

BasisTensors::BasisTensors(const PseudoHermitianStructure& s) : n_(s.dim()) {
  const std::size_t n = n_;
  const Field& f = s.field();
  const LieAlgebra& a = s.algebra();
  const Matrix& jm = s.jstruct().matrix();
  const Matrix& om = s.omega();

  std::vector<Vector> jcol;
  jcol.reserve(n);
  for (std::size_t j = 0; j < n; ++j) jcol.push_back(jm.column(j));

  nij_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = Vector::basis(f, n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ej = Vector::basis(f, n, j);
      Vector v = s.J(bracket(a, jcol[i], ej) + bracket(a, ei, jcol[j]));
      v += a.basis_bracket(i, j);
      v -= bracket(a, jcol[i], jcol[j]);
      nij_.push_back(std::move(v));
    }
  }

  // w_br[(i*n + j)*n + k] = omega([e_i, e_j], e_k)
  std::vector<Scalar> w_br(n * n * n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : a.bracket_terms(i, j)) {
        for (std::size_t k = 0; k < n; ++k) {
          if (!om(t.k, k).is_zero()) w_br[(i * n + j) * n + k] += t.coeff * om(t.k, k);
        }
      }
    }
  }
  domega_.assign(n * n * n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        domega_[(i * n + j) * n + k] =
            -w_br[(i * n + j) * n + k] - w_br[(j * n + k) * n + i] - w_br[(k * n + i) * n + j];
      }
    }
  }

  // psi(i,j,k) = sum_l N(i,j)_l omega(l,k) + sum_{b,c} domega(i,b,c) J(b,j) J(c,k)
  psi_.assign(n * n * n, f.zero());
  std::vector<Scalar> t(n * n * n, f.zero());  // t[(i*n + j)*n + c] = sum_b domega(i,b,c) J(b,j)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& jbj = jm(b, j);
        if (jbj.is_zero()) continue;
        for (std::size_t c = 0; c < n; ++c) {
          const Scalar& dw = domega_[(i * n + b) * n + c];
          if (!dw.is_zero()) t[(i * n + j) * n + c] += dw * jbj;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& nv = nij_[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        Scalar& out = psi_[(i * n + j) * n + k];
        for (std::size_t l = 0; l < n; ++l) {
          if (!nv[l].is_zero() && !om(l, k).is_zero()) out += nv[l] * om(l, k);
          const Scalar& tv = t[(i * n + j) * n + l];
          if (!tv.is_zero() && !jm(l, k).is_zero()) out += tv * jm(l, k);
        }
      }
    }
  }
}

NablaJTable::NablaJTable(const PseudoHermitianStructure& s, const ConnectionTable& gamma)
    : n_(s.dim()) {
  const std::size_t n = n_;
  if (gamma.dim() != n) throw DimensionError("NablaJTable: connection dimension mismatch");
  const Matrix& jm = s.jstruct().matrix();
  entries_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // nabla_{e_i}(J e_j) - J nabla_{e_i} e_j
      Vector v = -s.J(gamma(i, j));
      for (std::size_t b = 0; b < n; ++b) {
        if (!jm(b, j).is_zero()) v.axpy(jm(b, j), gamma(i, b));
      }
      entries_.push_back(std::move(v));
    }
  }
}

}  // namespace npk
