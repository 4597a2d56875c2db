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
#include <vector>

#include "npk/defect.hpp"
#include "npk/hermitian.hpp"

namespace npk {

// Tensors of left-invariant data. Every directional-derivative term of the
// general vector-field formulas vanishes here, since g and omega evaluated on
// left-invariant fields are constant functions.

/// Nijenhuis tensor N_J(X,Y) = J[JX,Y] + J[X,JY] + [X,Y] - [JX,JY].
Vector nijenhuis(const PseudoHermitianStructure& s, const Vector& x, const Vector& y);

/// d omega(X,Y,Z) = -omega([X,Y],Z) - omega([Y,Z],X) - omega([Z,X],Y).
Scalar d_omega(const PseudoHermitianStructure& s, const Vector& x, const Vector& y, const Vector& z);

/// psi(X,Y,Z) = omega(N_J(X,Y), Z) + d omega(X, JY, JZ).
Scalar psi(const PseudoHermitianStructure& s, const Vector& x, const Vector& y, const Vector& z);

/// Levi-Civita connection of a left-invariant metric: entry (i, j) holds the
/// coordinates of nabla_{e_i} e_j.
class ConnectionTable {
 public:
  ConnectionTable(std::size_t n, std::vector<Vector> entries, double scale);

  std::size_t dim() const { return n_; }
  const Vector& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  /// nabla_x y, bilinear in (x, y).
  Vector covariant(const Vector& x, const Vector& y) const;
  /// Magnitude bound of the Christoffel entries (float64 zero tests).
  double scale() const { return scale_; }

 private:
  std::size_t n_;
  std::vector<Vector> entries_;
  double scale_;
};

/// Solves 2 g(nabla_{e_i} e_j, e_k) = g([e_i,e_j],e_k) - g([e_i,e_k],e_j) - g([e_j,e_k],e_i)
/// for all (i, j) against a single inverse of the Gram matrix.
ConnectionTable levi_civita(const LieAlgebra& a, const BilinearForm& metric);
inline ConnectionTable levi_civita(const PseudoHermitianStructure& s) {
  return levi_civita(s.algebra(), s.metric());
}

/// max-norm of nabla_{e_i} e_j - nabla_{e_j} e_i - [e_i, e_j].
Defect torsion_defect(const ConnectionTable& gamma, const LieAlgebra& a);
/// max over (i,j,k) of |g(nabla_{e_i} e_j, e_k) + g(e_j, nabla_{e_i} e_k)|.
Defect metric_compatibility_defect(const ConnectionTable& gamma, const BilinearForm& metric);

/// (nabla_x J) y = nabla_x (J y) - J (nabla_x y).
Vector nabla_J(const PseudoHermitianStructure& s, const ConnectionTable& gamma, const Vector& x,
               const Vector& y);

/// N_J, d omega and psi on all basis tuples. psi is assembled from N_J and
/// d omega only; nothing here touches the connection.
class BasisTensors {
 public:
  explicit BasisTensors(const PseudoHermitianStructure& s);

  std::size_t dim() const { return n_; }
  const Vector& nijenhuis(std::size_t i, std::size_t j) const { return nij_[i * n_ + j]; }
  const Scalar& d_omega(std::size_t i, std::size_t j, std::size_t k) const {
    return domega_[(i * n_ + j) * n_ + k];
  }
  const Scalar& psi(std::size_t i, std::size_t j, std::size_t k) const {
    return psi_[(i * n_ + j) * n_ + k];
  }

 private:
  std::size_t n_;
  std::vector<Vector> nij_;
  std::vector<Scalar> domega_;
  std::vector<Scalar> psi_;
};

/// (nabla_{e_i} J) e_j on all basis pairs, from a connection table.
class NablaJTable {
 public:
  NablaJTable(const PseudoHermitianStructure& s, const ConnectionTable& gamma);

  std::size_t dim() const { return n_; }
  const Vector& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<Vector> entries_;
};

}  // namespace npk
