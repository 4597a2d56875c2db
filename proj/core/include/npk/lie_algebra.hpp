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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "npk/linalg.hpp"
#include "npk/scalar.hpp"

namespace npk {

/// Dense, unvalidated structure-constant tensor: entry (i, j, k) is the
/// coefficient of e_k in [e_i, e_j].
class StructureConstants {
 public:
  StructureConstants(const Field& field, std::size_t n);

  std::size_t dim() const { return n_; }
  const Field& field() const { return field_; }

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n_ + j) * n_ + k];
  }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * n_ + j) * n_ + k];
  }

  /// Sets c_ij^k = value and c_ji^k = -value.
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);

 private:
  Field field_;
  std::size_t n_;
  std::vector<Scalar> data_;
};

struct AntisymmetryReport {
  Scalar defect;  ///< max |c_ij^k + c_ji^k|
  std::optional<std::array<std::size_t, 3>> witness;
};

AntisymmetryReport antisymmetry_defect(const StructureConstants& c);

/// A finite-dimensional Lie algebra given by antisymmetric structure
/// constants. The Jacobi identity is not enforced on construction; use
/// jacobi() to test it.
class LieAlgebra {
 public:
  struct Term {
    std::size_t k;
    Scalar coeff;
  };

  /// Throws InvariantError unless `c` is antisymmetric, DimensionError when
  /// the label count disagrees with the dimension.
  LieAlgebra(std::vector<std::string> labels, StructureConstants c);

  static LieAlgebra abelian(const Field& field, std::size_t n);
  static LieAlgebra abelian(const Field& field, std::vector<std::string> labels);

  std::size_t dim() const { return c_.dim(); }
  const Field& field() const { return c_.field(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const StructureConstants& constants() const { return c_; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }

  /// Nonzero terms of [e_i, e_j], ascending in k.
  const std::vector<Term>& bracket_terms(std::size_t i, std::size_t j) const {
    return terms_[i * dim() + j];
  }
  Vector basis_bracket(std::size_t i, std::size_t j) const;
  bool is_abelian() const;
  /// Largest |c_ij^k| as a double.
  double constant_scale() const;

 private:
  std::vector<std::string> labels_;
  StructureConstants c_;
  std::vector<std::vector<Term>> terms_;
};

/// Bilinear extension of the structure constants.
Vector bracket(const LieAlgebra& a, const Vector& x, const Vector& y);

/// Matrix of y -> [x, y].
Matrix ad_matrix(const LieAlgebra& a, const Vector& x);

struct JacobiWitness {
  std::size_t i, j, l;  ///< basis triple
  std::size_t k;        ///< component carrying the largest violation
  Scalar value;
};

struct JacobiReport {
  Scalar defect;  ///< max-norm of the cyclic sum over all basis triples
  std::optional<JacobiWitness> witness;
};

JacobiReport jacobi(const LieAlgebra& a);
inline Scalar jacobi_defect(const LieAlgebra& a) { return jacobi(a).defect; }

/// Direct sum A + B with vanishing cross brackets. Basis labels are E1..En
/// for A and F1..Fm for B.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Lie algebra of the tangent group: basis (e_1^c .. e_n^c, e_1^v .. e_n^v)
/// with [X^c,Y^c] = [X,Y]^c, [X^c,Y^v] = [X,Y]^v, [X^v,Y^v] = 0.
/// Throws InvariantError when the input fails Jacobi (within `tol` relative
/// to the constant scale on float64).
LieAlgebra tangent_lift_algebra(const LieAlgebra& a, double tol = 1e-9);

/// Complete and vertical lifts of a base vector into the tangent algebra.
Vector complete_lift(const Vector& x);
Vector vertical_lift(const Vector& x);

}  // namespace npk
