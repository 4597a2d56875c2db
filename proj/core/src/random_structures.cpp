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

#include "npk/random_structures.hpp"

#include "npk/errors.hpp"

namespace npk {

LieAlgebra change_field(const LieAlgebra& a, const Field& field) {
  StructureConstants c(field, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (const auto& t : a.bracket_terms(i, j)) c(i, j, t.k) = field.embed(t.coeff);
    }
  }
  return LieAlgebra(a.labels(), std::move(c));
}

namespace {

Matrix change_field(const Matrix& m, const Field& field) {
  Matrix out = Matrix::zeros(field, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = field.embed(m(i, j));
  }
  return out;
}

}  // namespace

PseudoHermitianStructure change_field(const PseudoHermitianStructure& s, const Field& field) {
  return PseudoHermitianStructure(change_field(s.algebra(), field),
                                  BilinearForm(change_field(s.metric().gram(), field)),
                                  ComplexStructure(change_field(s.jstruct().matrix(), field)));
}

Vector random_vector(const Field& field, std::size_t n, std::mt19937_64& rng) {
  Vector v = Vector::zeros(field, n);
  if (field.is_exact()) {
    std::uniform_int_distribution<long> coeff(-4, 4);
    for (std::size_t i = 0; i < n; ++i) v[i] = field.from_int(coeff(rng));
  } else {
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) v[i] = field.from_double(coeff(rng));
  }
  return v;
}

PseudoHermitianStructure random_compatible_structure(const LieAlgebra& a, std::mt19937_64& rng) {
  const std::size_t n = a.dim();
  if (n == 0 || n % 2) throw DimensionError("random_compatible_structure: dimension must be even");
  const Field& f = a.field();
  const std::size_t m = n / 2;

  Matrix j0 = Matrix::zeros(f, n, n);
  Matrix g0 = Matrix::zeros(f, n, n);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < m; ++i) {
    j0(m + i, i) = f.one();
    j0(i, m + i) = -f.one();
    const Scalar d = coin(rng) ? f.one() : -f.one();
    g0(i, i) = d;
    g0(m + i, m + i) = d;
  }

  std::uniform_int_distribution<long> small(-2, 2);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix p = Matrix::zeros(f, n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        p(r, c) = f.is_exact() ? f.from_int(small(rng)) : f.from_double(unit(rng));
      }
    }
    Matrix pinv;
    try {
      pinv = inverse(p);
    } catch (const InvariantError&) {
      continue;
    }
    if (!f.is_exact() && max_abs_double(pinv) > 20.0) continue;
    Matrix j = p * j0 * pinv;
    Matrix g = pinv.transpose() * g0 * pinv;
    if (!f.is_exact()) {
      const Scalar half = f.from_double(0.5);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r + 1; c < n; ++c) g(r, c) = g(c, r) = half * (g(r, c) + g(c, r));
      }
    }
    return PseudoHermitianStructure(a, BilinearForm(std::move(g)), ComplexStructure(std::move(j)));
  }
  throw InvariantError("random_compatible_structure: no invertible draw");
}

}  // namespace npk
