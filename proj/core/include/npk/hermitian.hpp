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

#include <cstddef>

#include "npk/defect.hpp"
#include "npk/lie_algebra.hpp"
#include "npk/linalg.hpp"

namespace npk {

/// Symmetric bilinear form on the Lie algebra; gram(i, j) = form(e_i, e_j).
class BilinearForm {
 public:
  /// Throws DimensionError for non-square input and InvariantError when the
  /// matrix is not symmetric.
  explicit BilinearForm(Matrix gram);

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Scalar operator()(const Vector& x, const Vector& y) const { return bilinear(gram_, x, y); }

 private:
  Matrix gram_;
};

/// Linear endomorphism J of the Lie algebra; column j holds J(e_j).
/// J^2 = -id is measured by check_complex_structure, not enforced here.
class ComplexStructure {
 public:
  explicit ComplexStructure(Matrix m);

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Vector operator()(const Vector& x) const { return m_ * x; }

 private:
  Matrix m_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  bool nondegenerate() const { return zero == 0; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Sylvester signature by symmetric congruence diagonalization. Pivot signs
/// are decided exactly on exact fields; on float64 a pivot counts as zero when
/// |p| <= tol * max|G|.
Signature signature(const BilinearForm& form, double tol = 1e-9);

/// Left-invariant almost pseudo-Hermitian data (g, J) on a Lie algebra.
///
/// Construction rejects mismatched dimensions or fields, odd dimension, and a
/// degenerate metric. J^2 = -id and g(J., J.) = g are reported by the check_*
/// functions so that bad inputs can be diagnosed.
class PseudoHermitianStructure {
 public:
  PseudoHermitianStructure(LieAlgebra algebra, BilinearForm metric, ComplexStructure jstruct,
                           double tol = 1e-9);

  std::size_t dim() const { return algebra_.dim(); }
  const Field& field() const { return algebra_.field(); }
  const LieAlgebra& algebra() const { return algebra_; }
  const BilinearForm& metric() const { return metric_; }
  const ComplexStructure& jstruct() const { return jstruct_; }
  const Signature& metric_signature() const { return signature_; }
  /// omega(i, j) = g(J e_i, e_j).
  const Matrix& omega() const { return omega_; }

  Scalar g(const Vector& x, const Vector& y) const { return metric_(x, y); }
  Scalar w(const Vector& x, const Vector& y) const { return bilinear(omega_, x, y); }
  Vector J(const Vector& x) const { return jstruct_(x); }

  /// Magnitude bound max(1,|c|) * max(1,|g|) * max(1,|J|)^3 used to scale
  /// float64 zero tests of tensors built from this structure.
  double scale() const { return scale_; }

 private:
  LieAlgebra algebra_;
  BilinearForm metric_;
  ComplexStructure jstruct_;
  Signature signature_;
  Matrix omega_;
  double scale_ = 1.0;
};

/// max-norm of J^2 + I; witness is the entry (i, j).
Defect check_complex_structure(const PseudoHermitianStructure& s);
/// max over basis pairs of |g(J e_i, J e_j) - g(e_i, e_j)|.
Defect check_compatibility(const PseudoHermitianStructure& s);

/// Matrix of omega(x, y) = g(Jx, y), i.e. J^T G.
Matrix fundamental_two_form(const BilinearForm& metric, const ComplexStructure& j);
inline Matrix fundamental_two_form(const PseudoHermitianStructure& s) { return s.omega(); }

/// True when J^2 = -id, g(J., J.) = g and g is nondegenerate.
bool is_almost_pseudo_hermitian(const PseudoHermitianStructure& s, double tol = 1e-9);

/// Lifted pair on the tangent algebra: J^ = diag(J, J), and
/// mu^ = [[0, G], [G^T, 0]] in the (complete, vertical) basis.
/// Throws InvariantError when the input fails the Hermitian checks.
PseudoHermitianStructure tangent_lift_structure(const PseudoHermitianStructure& s,
                                                double tol = 1e-9);

}  // namespace npk
