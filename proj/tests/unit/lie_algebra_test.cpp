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

#include "npk/catalog.hpp"
#include "npk/errors.hpp"
#include "npk/lie_algebra.hpp"
#include "npk/random_structures.hpp"

namespace npk {
namespace {

const Field kQ = Field::rational();

Vector e(std::size_t n, std::size_t i) { return Vector::basis(kQ, n, i); }

// Brute-force cyclic sum over all ordered triples, written independently of
// the library's triple enumeration.
Scalar brute_jacobi(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  Scalar worst = a.field().zero();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const Vector x = Vector::basis(a.field(), n, i), y = Vector::basis(a.field(), n, j),
                     z = Vector::basis(a.field(), n, l);
        const Vector s = bracket(a, bracket(a, x, y), z) + bracket(a, bracket(a, y, z), x) +
                         bracket(a, bracket(a, z, x), y);
        for (const auto& c : s) worst = max_abs_of(worst, c.abs());
      }
  return worst;
}

TEST(LieAlgebra, Sl2Brackets) {
  const LieAlgebra a = sl2r();
  EXPECT_EQ(bracket(a, e(3, 0), e(3, 1)), kQ.from_int(2) * e(3, 2));
  EXPECT_EQ(bracket(a, e(3, 0), e(3, 2)), kQ.from_int(2) * e(3, 1));
  EXPECT_EQ(bracket(a, e(3, 1), e(3, 2)), kQ.from_int(-2) * e(3, 0));
  EXPECT_EQ(a.labels(), (std::vector<std::string>{"X1", "X2", "X3"}));
}

TEST(LieAlgebra, SelfBracketVanishes) {
  const LieAlgebra a = sl2r();
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const Vector x = random_vector(kQ, 3, rng);
    EXPECT_TRUE(bracket(a, x, x).is_zero());
    EXPECT_TRUE((ad_matrix(a, x) * x).is_zero());
  }
}

TEST(LieAlgebra, JacobiSl2AndAbelian) {
  EXPECT_TRUE(jacobi_defect(sl2r()).is_zero());
  EXPECT_TRUE(brute_jacobi(sl2r()).is_zero());
  EXPECT_TRUE(jacobi_defect(LieAlgebra::abelian(kQ, 5)).is_zero());
}

TEST(LieAlgebra, DiagonalTypePerturbationStillSatisfiesJacobi) {
  // [X1,X2] = 3X3 instead of 2X3: every term of the cyclic sum on (X1,X2,X3)
  // is a self-bracket, so the identity survives.
  StructureConstants c = sl2r().constants();
  c.set_bracket(0, 1, 2, kQ.from_int(3));
  const LieAlgebra a({"X1", "X2", "X3"}, c);
  EXPECT_TRUE(brute_jacobi(a).is_zero());
  EXPECT_TRUE(jacobi_defect(a).is_zero());
}

TEST(LieAlgebra, JacobiWitness) {
  StructureConstants c = sl2r().constants();
  c.set_bracket(0, 1, 0, kQ.one());  // [X1,X2] = 2X3 + X1
  const LieAlgebra a({"X1", "X2", "X3"}, c);
  const JacobiReport r = jacobi(a);
  EXPECT_EQ(r.defect, brute_jacobi(a));
  EXPECT_EQ(r.defect, kQ.from_int(2));
  ASSERT_TRUE(r.witness.has_value());
  const auto& w = *r.witness;
  const Vector x = e(3, w.i), y = e(3, w.j), z = e(3, w.l);
  const Vector s = bracket(a, bracket(a, x, y), z) + bracket(a, bracket(a, y, z), x) +
                   bracket(a, bracket(a, z, x), y);
  EXPECT_EQ(s[w.k], w.value);
  EXPECT_EQ(w.value.abs(), r.defect);
}

TEST(LieAlgebra, AntisymmetryRejected) {
  StructureConstants c(kQ, 2);
  c(0, 1, 0) = kQ.one();
  const AntisymmetryReport r = antisymmetry_defect(c);
  EXPECT_EQ(r.defect, kQ.one());
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_THROW(LieAlgebra({"a", "b"}, c), InvariantError);
  c(1, 0, 0) = kQ.from_int(-1);
  EXPECT_NO_THROW(LieAlgebra({"a", "b"}, c));
  EXPECT_THROW(LieAlgebra({"a"}, c), DimensionError);
}

TEST(LieAlgebra, AdMatrix) {
  const LieAlgebra a = sl2r();
  const Matrix ad = ad_matrix(a, e(3, 0));
  EXPECT_TRUE(ad.column(0).is_zero());
  EXPECT_EQ(ad.column(1), kQ.from_int(2) * e(3, 2));
  EXPECT_EQ(ad.column(2), kQ.from_int(2) * e(3, 1));
  for (std::size_t i = 0; i < 3; ++i) {
    const Matrix m = ad_matrix(a, e(3, i));
    Scalar tr = kQ.zero();
    for (std::size_t k = 0; k < 3; ++k) tr += m(k, k);
    EXPECT_TRUE(tr.is_zero());
  }
  EXPECT_TRUE(max_norm(ad_matrix(LieAlgebra::abelian(kQ, 4), e(4, 1))).is_zero());
}

TEST(LieAlgebra, DirectSum) {
  const LieAlgebra s = direct_sum(sl2r(), sl2r());
  EXPECT_EQ(s.labels(), (std::vector<std::string>{"E1", "E2", "E3", "F1", "F2", "F3"}));
  EXPECT_EQ(bracket(s, e(6, 0), e(6, 1)), kQ.from_int(2) * e(6, 2));
  EXPECT_EQ(bracket(s, e(6, 3), e(6, 4)), kQ.from_int(2) * e(6, 5));
  EXPECT_TRUE(bracket(s, e(6, 0), e(6, 4)).is_zero());
  EXPECT_TRUE(jacobi_defect(s).is_zero());
  EXPECT_TRUE(brute_jacobi(s).is_zero());
}

TEST(LieAlgebra, TangentLift) {
  const LieAlgebra t = tangent_lift_algebra(sl2r());
  ASSERT_EQ(t.dim(), 6u);
  EXPECT_EQ(t.labels(),
            (std::vector<std::string>{"X1^c", "X2^c", "X3^c", "X1^v", "X2^v", "X3^v"}));
  EXPECT_EQ(bracket(t, e(6, 0), e(6, 1)), kQ.from_int(2) * e(6, 2));
  EXPECT_TRUE(bracket(t, e(6, 3), e(6, 4)).is_zero());
  EXPECT_EQ(bracket(t, e(6, 0), e(6, 4)), kQ.from_int(2) * e(6, 5));
  EXPECT_EQ(bracket(t, e(6, 4), e(6, 0)), kQ.from_int(-2) * e(6, 5));
  EXPECT_TRUE(jacobi_defect(t).is_zero());
  const LieAlgebra tt = tangent_lift_algebra(t);
  EXPECT_EQ(tt.label(4), "X2^v^c");
  EXPECT_EQ(tt.label(6), "X1^c^v");
  EXPECT_TRUE(jacobi_defect(tt).is_zero());
}

TEST(LieAlgebra, LiftsAreHomomorphic) {
  const LieAlgebra a = sl2r();
  const LieAlgebra t = tangent_lift_algebra(a);
  std::mt19937_64 rng(9);
  for (int r = 0; r < 40; ++r) {
    const Vector x = random_vector(kQ, 3, rng), y = random_vector(kQ, 3, rng);
    const Vector xy = bracket(a, x, y);
    EXPECT_EQ(bracket(t, complete_lift(x), complete_lift(y)), complete_lift(xy));
    EXPECT_EQ(bracket(t, complete_lift(x), vertical_lift(y)), vertical_lift(xy));
    EXPECT_TRUE(bracket(t, vertical_lift(x), vertical_lift(y)).is_zero());
  }
}

TEST(LieAlgebra, TangentLiftRejectsNonLie) {
  StructureConstants c = sl2r().constants();
  c.set_bracket(0, 1, 0, kQ.one());
  EXPECT_THROW(tangent_lift_algebra(LieAlgebra({"X1", "X2", "X3"}, c)), InvariantError);
}

TEST(LieAlgebra, BracketTermsSparse) {
  const LieAlgebra a = sl2r();
  ASSERT_EQ(a.bracket_terms(0, 1).size(), 1u);
  EXPECT_EQ(a.bracket_terms(0, 1)[0].k, 2u);
  EXPECT_TRUE(a.bracket_terms(0, 0).empty());
  EXPECT_FALSE(a.is_abelian());
  EXPECT_TRUE(LieAlgebra::abelian(kQ, 2).is_abelian());
  EXPECT_EQ(a.constant_scale(), 2.0);
}

}  // namespace
}  // namespace npk
