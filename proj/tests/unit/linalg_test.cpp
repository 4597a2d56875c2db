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

#include <gtest/gtest.h>

#include <random>

#include "npk/errors.hpp"
#include "npk/linalg.hpp"
#include "npk/random_structures.hpp"

namespace npk {
namespace {

TEST(Linalg, InverseRational) {
  std::mt19937_64 rng(3);
  const Field q = Field::rational();
  std::uniform_int_distribution<long> d(-3, 3);
  int done = 0;
  while (done < 30) {
    Matrix m = Matrix::zeros(q, 5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = q.from_int(d(rng));
    Matrix inv;
    try {
      inv = inverse(m);
    } catch (const InvariantError&) {
      continue;
    }
    EXPECT_EQ(m * inv, Matrix::identity(q, 5));
    EXPECT_EQ(inv * m, Matrix::identity(q, 5));
    ++done;
  }
}

TEST(Linalg, SingularThrows) {
  const Field q = Field::rational();
  Matrix m = Matrix::zeros(q, 2, 2);
  m(0, 0) = q.from_int(1);
  m(0, 1) = q.from_int(2);
  m(1, 0) = q.from_int(2);
  m(1, 1) = q.from_int(4);
  EXPECT_THROW(inverse(m), InvariantError);
}

TEST(Linalg, BilinearAndNorm) {
  const Field q = Field::rational();
  Matrix g = Matrix::identity(q, 3);
  g(0, 2) = g(2, 0) = q.from_int(-5);
  const Vector x = Vector::basis(q, 3, 0), y = Vector::basis(q, 3, 2);
  EXPECT_EQ(bilinear(g, x, y), q.from_int(-5));
  EXPECT_EQ(max_norm(g), q.from_int(5));
  EXPECT_EQ(max_norm(x - y), q.one());
  EXPECT_EQ(max_abs_double(g), 5.0);
}

TEST(Linalg, ColumnsAndTranspose) {
  const Field q = Field::rational();
  const Matrix m = Matrix::from_columns({Vector({q.from_int(1), q.from_int(2)}),
                                         Vector({q.from_int(3), q.from_int(4)})});
  EXPECT_EQ(m(1, 0), q.from_int(2));
  EXPECT_EQ(m(0, 1), q.from_int(3));
  EXPECT_EQ(m.transpose()(0, 1), q.from_int(2));
  EXPECT_EQ(m.column(1), Vector({q.from_int(3), q.from_int(4)}));
}

TEST(Linalg, FloatInverse) {
  std::mt19937_64 rng(5);
  const Field f = Field::float64();
  Matrix m = Matrix::zeros(f, 6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    const Vector v = random_vector(f, 6, rng);
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = v[j] + (i == j ? f.from_int(3) : f.zero());
  }
  const Matrix p = m * inverse(m) - Matrix::identity(f, 6);
  EXPECT_LT(max_norm(p).to_double(), 1e-12);
}

}  // namespace
}  // namespace npk
