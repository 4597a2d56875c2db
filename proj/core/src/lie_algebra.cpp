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

#include "npk/lie_algebra.hpp"

#include <algorithm>
#include <cmath>

#include "npk/errors.hpp"

namespace npk {

StructureConstants::StructureConstants(const Field& field, std::size_t n)
    : field_(field), n_(n), data_(n * n * n, field.zero()) {}

void StructureConstants::set_bracket(std::size_t i, std::size_t j, std::size_t k,
                                     const Scalar& value) {
  (*this)(i, j, k) = value;
  (*this)(j, i, k) = -value;
}

AntisymmetryReport antisymmetry_defect(const StructureConstants& c) {
  const std::size_t n = c.dim();
  AntisymmetryReport report{c.field().zero(), std::nullopt};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Scalar s = (c(i, j, k) + c(j, i, k)).abs();
        if (compare(s, report.defect) > 0) {
          report.defect = std::move(s);
          report.witness = std::array<std::size_t, 3>{i, j, k};
        }
      }
    }
  }
  return report;
}

LieAlgebra::LieAlgebra(std::vector<std::string> labels, StructureConstants c)
    : labels_(std::move(labels)), c_(std::move(c)) {
  const std::size_t n = c_.dim();
  if (labels_.size() != n) {
    throw DimensionError("expected " + std::to_string(n) + " basis labels, got " +
                         std::to_string(labels_.size()));
  }
  const auto anti = antisymmetry_defect(c_);
  if (!anti.defect.is_zero()) {
    const auto& w = *anti.witness;
    throw InvariantError("structure constants are not antisymmetric at (" + std::to_string(w[0]) +
                         ", " + std::to_string(w[1]) + ", " + std::to_string(w[2]) + ")");
  }
  terms_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!c_(i, j, k).is_zero()) terms_[i * n + j].push_back({k, c_(i, j, k)});
      }
    }
  }
}

LieAlgebra LieAlgebra::abelian(const Field& field, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  return abelian(field, std::move(labels));
}

LieAlgebra LieAlgebra::abelian(const Field& field, std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  return LieAlgebra(std::move(labels), StructureConstants(field, n));
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  Vector v = Vector::zeros(field(), dim());
  for (const auto& t : bracket_terms(i, j)) v[t.k] = t.coeff;
  return v;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.empty(); });
}

double LieAlgebra::constant_scale() const {
  double best = 0.0;
  for (const auto& terms : terms_) {
    for (const auto& t : terms) best = std::max(best, std::fabs(t.coeff.to_double()));
  }
  return best;
}

Vector bracket(const LieAlgebra& a, const Vector& x, const Vector& y) {
  const std::size_t n = a.dim();
  if (x.size() != n || y.size() != n) {
    throw DimensionError("bracket: vectors must have dimension " + std::to_string(n));
  }
  Vector out = Vector::zeros(a.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || y[j].is_zero()) continue;
      const auto& terms = a.bracket_terms(i, j);
      if (terms.empty()) continue;
      const Scalar xy = x[i] * y[j];
      for (const auto& t : terms) out[t.k] += xy * t.coeff;
    }
  }
  return out;
}

Matrix ad_matrix(const LieAlgebra& a, const Vector& x) {
  const std::size_t n = a.dim();
  if (x.size() != n) throw DimensionError("ad_matrix: vector must have dimension " + std::to_string(n));
  Matrix m = Matrix::zeros(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : a.bracket_terms(i, j)) m(t.k, j) += x[i] * t.coeff;
    }
  }
  return m;
}

namespace {

// out += coeff * [[e_a, e_b], e_c]
void add_double_bracket(const LieAlgebra& a, std::size_t ea, std::size_t eb, std::size_t ec,
                        std::vector<Scalar>& out) {
  for (const auto& outer : a.bracket_terms(ea, eb)) {
    for (const auto& inner : a.bracket_terms(outer.k, ec)) {
      out[inner.k] += outer.coeff * inner.coeff;
    }
  }
}

}  // namespace

JacobiReport jacobi(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  JacobiReport report{a.field().zero(), std::nullopt};
  std::vector<Scalar> cyc(n, a.field().zero());
  // The cyclic sum is alternating under antisymmetric constants, so strictly
  // increasing triples cover every basis triple up to sign.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t l = j + 1; l < n; ++l) {
        std::fill(cyc.begin(), cyc.end(), a.field().zero());
        add_double_bracket(a, i, j, l, cyc);
        add_double_bracket(a, j, l, i, cyc);
        add_double_bracket(a, l, i, j, cyc);
        for (std::size_t k = 0; k < n; ++k) {
          Scalar v = cyc[k].abs();
          if (compare(v, report.defect) > 0) {
            report.defect = v;
            report.witness = JacobiWitness{i, j, l, k, cyc[k]};
          }
        }
      }
    }
  }
  return report;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (!(a.field() == b.field())) {
    throw FieldError("direct_sum: fields differ (" + a.field().name() + " vs " + b.field().name() + ")");
  }
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  StructureConstants c(a.field(), na + nb);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < na; ++i) labels.push_back("E" + std::to_string(i + 1));
  for (std::size_t i = 0; i < nb; ++i) labels.push_back("F" + std::to_string(i + 1));
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      for (const auto& t : a.bracket_terms(i, j)) c(i, j, t.k) = t.coeff;
    }
  }
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      for (const auto& t : b.bracket_terms(i, j)) c(na + i, na + j, na + t.k) = t.coeff;
    }
  }
  return LieAlgebra(std::move(labels), std::move(c));
}

LieAlgebra tangent_lift_algebra(const LieAlgebra& a, double tol) {
  const auto jac = jacobi(a);
  const double scale = std::max(1.0, a.constant_scale() * a.constant_scale());
  if (!negligible(jac.defect, scale, tol)) {
    throw InvariantError("tangent_lift_algebra: input violates the Jacobi identity (defect " +
                         jac.defect.to_string() + ")");
  }
  const std::size_t n = a.dim();
  StructureConstants c(a.field(), 2 * n);
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l + "^c");
  for (const auto& l : a.labels()) labels.push_back(l + "^v");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : a.bracket_terms(i, j)) {
        c(i, j, t.k) = t.coeff;              // [X^c, Y^c] = [X, Y]^c
        c(i, n + j, n + t.k) = t.coeff;      // [X^c, Y^v] = [X, Y]^v
        c(n + j, i, n + t.k) = -t.coeff;     // [Y^v, X^c]
      }
    }
  }
  return LieAlgebra(std::move(labels), std::move(c));
}

Vector complete_lift(const Vector& x) {
  std::vector<Scalar> c(x.begin(), x.end());
  const Scalar zero = x.size() ? x[0] - x[0] : Scalar();
  c.insert(c.end(), x.size(), zero);
  return Vector(std::move(c));
}

Vector vertical_lift(const Vector& x) {
  const Scalar zero = x.size() ? x[0] - x[0] : Scalar();
  std::vector<Scalar> c(x.size(), zero);
  c.insert(c.end(), x.begin(), x.end());
  return Vector(std::move(c));
}

}  // namespace npk
