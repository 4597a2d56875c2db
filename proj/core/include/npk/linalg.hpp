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

#include "npk/scalar.hpp"

namespace npk {

/// Coordinates of an element of a Lie algebra in its basis.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}

  static Vector zeros(const Field& field, std::size_t n);
  static Vector basis(const Field& field, std::size_t n, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& s);
  /// this += s * o
  Vector& axpy(const Scalar& s, const Vector& o);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
  friend Vector operator-(Vector v) {
    for (auto& c : v.coords_) c = -c;
    return v;
  }
  friend bool operator==(const Vector& a, const Vector& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Scalar> coords_;
};

/// Dense row-major matrix of Scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Scalar& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix zeros(const Field& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& field, std::size_t n);
  /// Matrix whose j-th column is columns[j].
  static Matrix from_columns(const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Largest |entry|; exact comparison on exact fields. Inputs must be non-empty.
Scalar max_norm(const Vector& v);
Scalar max_norm(const Matrix& m);
/// Largest |entry| as a double, for float-backend scale estimates.
double max_abs_double(const Matrix& m);

/// x^T G y.
Scalar bilinear(const Matrix& gram, const Vector& x, const Vector& y);

/// Gauss-Jordan inverse. Exact pivoting on exact fields, partial pivoting by
/// magnitude on float64. Throws InvariantError when singular.
Matrix inverse(const Matrix& m);

}  // namespace npk
