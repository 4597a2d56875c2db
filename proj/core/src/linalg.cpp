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

#include "npk/linalg.hpp"

#include <cmath>

#include "npk/errors.hpp"

namespace npk {
namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": size mismatch (" + std::to_string(a) + " vs " +
                         std::to_string(b) + ")");
  }
}

}  // namespace

Vector Vector::zeros(const Field& field, std::size_t n) {
  return Vector(std::vector<Scalar>(n, field.zero()));
}

Vector Vector::basis(const Field& field, std::size_t n, std::size_t i) {
  Vector v = zeros(field, n);
  v[i] = field.one();
  return v;
}

bool Vector::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Vector& Vector::operator+=(const Vector& o) {
  require_same_size(size(), o.size(), "vector add");
  for (std::size_t i = 0; i < size(); ++i) {
    if (!o[i].is_zero()) coords_[i] += o[i];
  }
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_same_size(size(), o.size(), "vector sub");
  for (std::size_t i = 0; i < size(); ++i) {
    if (!o[i].is_zero()) coords_[i] -= o[i];
  }
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Vector& Vector::axpy(const Scalar& s, const Vector& o) {
  require_same_size(size(), o.size(), "vector axpy");
  if (s.is_zero()) return *this;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!o[i].is_zero()) coords_[i] += s * o[i];
  }
  return *this;
}

Matrix Matrix::zeros(const Field& field, std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, field.zero());
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m = zeros(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns) {
  if (columns.empty()) return {};
  const std::size_t n = columns.front().size();
  Matrix m(n, columns.size(), columns.front()[0]);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require_same_size(columns[j].size(), n, "from_columns");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  std::vector<Scalar> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return Vector(std::move(c));
}

Matrix Matrix::transpose() const {
  Matrix t;
  t.rows_ = cols_;
  t.cols_ = rows_;
  t.data_.reserve(data_.size());
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) t.data_.push_back((*this)(i, j));
  }
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_size(rows_, o.rows_, "matrix add");
  require_same_size(cols_, o.cols_, "matrix add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_size(rows_, o.rows_, "matrix sub");
  require_same_size(cols_, o.cols_, "matrix sub");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_size(a.cols_, b.rows_, "matrix product");
  Matrix c(a.rows_, b.cols_, a.data_.empty() ? Scalar() : a.data_.front() - a.data_.front());
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
  require_same_size(a.cols_, x.size(), "matrix-vector product");
  if (a.data_.empty()) return Vector();
  const Scalar zero = a.data_.front() - a.data_.front();
  std::vector<Scalar> y(a.rows_, zero);
  for (std::size_t k = 0; k < a.cols_; ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      const Scalar& aik = a(i, k);
      if (!aik.is_zero()) y[i] += aik * x[k];
    }
  }
  return Vector(std::move(y));
}

Scalar max_norm(const Vector& v) {
  if (v.size() == 0) throw DimensionError("max_norm of an empty vector");
  Scalar best = v[0].abs();
  for (std::size_t i = 1; i < v.size(); ++i) {
    Scalar a = v[i].abs();
    if (compare(a, best) > 0) best = std::move(a);
  }
  return best;
}

Scalar max_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw DimensionError("max_norm of an empty matrix");
  Scalar best = m(0, 0).abs();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Scalar a = m(i, j).abs();
      if (compare(a, best) > 0) best = std::move(a);
    }
  }
  return best;
}

double max_abs_double(const Matrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, std::fabs(m(i, j).to_double()));
  }
  return best;
}

Scalar bilinear(const Matrix& gram, const Vector& x, const Vector& y) {
  require_same_size(gram.rows(), x.size(), "bilinear");
  require_same_size(gram.cols(), y.size(), "bilinear");
  Scalar acc = gram(0, 0) - gram(0, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero() || gram(i, j).is_zero()) continue;
      acc += x[i] * gram(i, j) * y[j];
    }
  }
  return acc;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  const bool exact = m(0, 0).is_exact();
  Matrix a = m;
  const Scalar zero = m(0, 0) - m(0, 0);
  Matrix inv(n, n, zero);
  Scalar one = zero;
  {
    // one in the matrix's own field
    Scalar probe = m(0, 0);
    for (std::size_t i = 0; i < n && probe.is_zero(); ++i) {
      for (std::size_t j = 0; j < n && probe.is_zero(); ++j) probe = m(i, j);
    }
    if (probe.is_zero()) throw InvariantError("matrix is singular");
    one = probe / probe;
  }
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = one;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    if (exact) {
      for (std::size_t r = col; r < n; ++r) {
        if (!a(r, col).is_zero()) {
          pivot = r;
          break;
        }
      }
    } else {
      double best = 0.0;
      for (std::size_t r = col; r < n; ++r) {
        const double v = std::fabs(a(r, col).float_value());
        if (v > best) {
          best = v;
          pivot = r;
        }
      }
    }
    if (pivot == n) throw InvariantError("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Scalar p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(col, j).is_zero()) a(col, j) /= p;
      if (!inv(col, j).is_zero()) inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Scalar f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace npk
