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

#include <Eigen/Dense>
#include <random>

#include "model.hpp"
#include "npk/catalog.hpp"
#include "npk/errors.hpp"
#include "npk/hermitian.hpp"
#include "npk/random_structures.hpp"

namespace npk {
namespace {

const Field kQ = Field::rational();
const Field kQ3 = Field::quadratic(3);

// Inertia from float eigenvalues; used as an oracle on well-separated spectra.
Signature eigen_signature(const Matrix& g) {
  const std::size_t n = g.rows();
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = g(i, j).to_double();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  Signature s;
  for (double ev : es.eigenvalues()) {
    if (ev > 1e-9) ++s.positive;
    else if (ev < -1e-9) ++s.negative;
    else ++s.zero;
  }
  return s;
}

Matrix canonical_j(const Field& f, std::size_t m) {
  Matrix j = Matrix::zeros(f, 2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    j(m + i, i) = f.one();
    j(i, m + i) = -f.one();
  }
  return j;
}

TEST(Hermitian, ExampleStructureMatchesTables) {
  const PseudoHermitianStructure s = sl2xsl2_nearly_kahler();
  const oracle::Model<oracle::Q3> m = oracle::example_model();
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      EXPECT_EQ(oracle::to_q3(s.metric().gram()(i, j)), m.G[i * 6 + j]) << i << "," << j;
      EXPECT_EQ(oracle::to_q3(s.jstruct().matrix()(i, j)), m.J[i * 6 + j]) << i << "," << j;
      for (std::size_t k = 0; k < 6; ++k)
        EXPECT_EQ(oracle::to_q3(s.algebra().constant(i, j, k)), m.C(i, j, k));
    }
  }
  // g(E3, F3) = 1/3 and J F2 = -(2 E2 + F2)/sqrt3.
  EXPECT_EQ(s.metric().gram()(2, 5), kQ3.from_rational(Rational(1, 3)));
  const Vector jf2 = s.J(Vector::basis(kQ3, 6, 4));
  EXPECT_EQ(jf2[1], kQ3.from_surd(0, Rational(-2, 3)));
  EXPECT_EQ(jf2[4], kQ3.from_surd(0, Rational(-1, 3)));
}

TEST(Hermitian, ComplexStructureDefect) {
  EXPECT_TRUE(check_complex_structure(sl2xsl2_nearly_kahler()).value.is_zero());
  const LieAlgebra a = LieAlgebra::abelian(kQ, 4);
  const PseudoHermitianStructure canon(a, BilinearForm(Matrix::identity(kQ, 4)),
                                       ComplexStructure(canonical_j(kQ, 2)));
  EXPECT_TRUE(check_complex_structure(canon).value.is_zero());
  const PseudoHermitianStructure id(a, BilinearForm(Matrix::identity(kQ, 4)),
                                    ComplexStructure(Matrix::identity(kQ, 4)));
  const Defect d = check_complex_structure(id);
  EXPECT_EQ(d.value, kQ.from_int(2));
  EXPECT_FALSE(d.at.empty());
}

TEST(Hermitian, Compatibility) {
  EXPECT_TRUE(check_compatibility(sl2xsl2_nearly_kahler()).value.is_zero());
  for (std::size_t m = 1; m <= 3; ++m)
    EXPECT_TRUE(check_compatibility(abelian_kahler(m)).value.is_zero());
  Matrix g = Matrix::identity(kQ, 4);
  g(1, 1) = kQ.from_int(2);
  const PseudoHermitianStructure s(LieAlgebra::abelian(kQ, 4), BilinearForm(g),
                                   ComplexStructure(canonical_j(kQ, 2)));
  const Defect d = check_compatibility(s);
  EXPECT_EQ(d.value, kQ.one());
  ASSERT_EQ(d.at.size(), 2u);
  // the violating pair touches e_2 or its J-partner e_4
  EXPECT_TRUE(d.at[0] == 1 || d.at[0] == 3);
  EXPECT_FALSE(is_almost_pseudo_hermitian(s));
}

TEST(Hermitian, Signatures) {
  const PseudoHermitianStructure s = sl2xsl2_nearly_kahler();
  EXPECT_EQ(s.metric_signature(), (Signature{4, 2, 0}));
  EXPECT_EQ(eigen_signature(s.metric().gram()), (Signature{4, 2, 0}));
  EXPECT_EQ(signature(BilinearForm(Matrix::identity(kQ, 5))), (Signature{5, 0, 0}));
  Matrix hyp = Matrix::zeros(kQ, 2, 2);
  hyp(0, 1) = hyp(1, 0) = kQ.one();
  EXPECT_EQ(signature(BilinearForm(hyp)), (Signature{1, 1, 0}));
  Matrix deg = Matrix::identity(kQ, 3);
  deg(2, 2) = kQ.zero();
  EXPECT_EQ(signature(BilinearForm(deg)), (Signature{2, 0, 1}));
}

TEST(Hermitian, SignatureAgainstEigenvalues) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 6;
    Matrix g = Matrix::zeros(kQ, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = kQ.from_int(d(rng));
    // integer matrices: eigenvalues are algebraic integers, so a nonzero one
    // cannot hide below 1e-9 at this size
    EXPECT_EQ(signature(BilinearForm(g)), eigen_signature(g));
  }
}

TEST(Hermitian, FundamentalForm) {
  const PseudoHermitianStructure s = sl2xsl2_nearly_kahler();
  const Matrix& w = s.omega();
  EXPECT_EQ(w(0, 3), kQ3.from_surd(0, Rational(1, 3)));
  EXPECT_TRUE(max_norm(w + w.transpose()).is_zero());
  const PseudoHermitianStructure k = abelian_kahler(1);
  EXPECT_EQ(k.omega()(0, 1), kQ.one());
  EXPECT_EQ(k.omega()(1, 0), -kQ.one());
  EXPECT_EQ(fundamental_two_form(k.metric(), k.jstruct()), k.omega());
}

TEST(Hermitian, LiftedStructure) {
  const PseudoHermitianStructure s = sl2xsl2_nearly_kahler();
  const PseudoHermitianStructure t = tangent_lift_structure(s);
  ASSERT_EQ(t.dim(), 12u);
  const Matrix& g = t.metric().gram();
  EXPECT_EQ(g(0, 9), kQ3.from_rational(Rational(-1, 3)));  // mu^(E1^c, F1^v)
  EXPECT_TRUE(g(0, 0).is_zero());
  EXPECT_TRUE(g(6, 6).is_zero());
  const Vector je1v = t.J(Vector::basis(kQ3, 12, 6));
  for (std::size_t i = 0; i < 12; ++i) {
    Scalar expect = kQ3.zero();
    if (i == 6) expect = kQ3.from_surd(0, Rational(1, 3));
    if (i == 9) expect = kQ3.from_surd(0, Rational(2, 3));
    EXPECT_EQ(je1v[i], expect) << i;
  }
  EXPECT_EQ(t.metric_signature(), (Signature{6, 6, 0}));
  EXPECT_EQ(eigen_signature(g), (Signature{6, 6, 0}));
  EXPECT_TRUE(is_almost_pseudo_hermitian(t));
  EXPECT_EQ(tangent_lift_structure(abelian_kahler(1)).metric_signature(), (Signature{2, 2, 0}));
}

TEST(Hermitian, LiftedSignatureIsSplit) {
  std::mt19937_64 rng(4);
  const LieAlgebra base = direct_sum(sl2r(), sl2r());
  for (int t = 0; t < 10; ++t) {
    const PseudoHermitianStructure s = random_compatible_structure(base, rng);
    EXPECT_EQ(tangent_lift_structure(s).metric_signature(), (Signature{6, 6, 0}));
  }
}

TEST(Hermitian, ConstructionRejectsBadInput) {
  const LieAlgebra a = LieAlgebra::abelian(kQ, 3);
  EXPECT_THROW(PseudoHermitianStructure(a, BilinearForm(Matrix::identity(kQ, 3)),
                                        ComplexStructure(Matrix::identity(kQ, 3))),
               DimensionError);
  const LieAlgebra b = LieAlgebra::abelian(kQ, 2);
  Matrix deg = Matrix::identity(kQ, 2);
  deg(1, 1) = kQ.zero();
  EXPECT_THROW(PseudoHermitianStructure(b, BilinearForm(deg), ComplexStructure(canonical_j(kQ, 1))),
               InvariantError);
  Matrix asym = Matrix::identity(kQ, 2);
  asym(0, 1) = kQ.one();
  EXPECT_THROW(BilinearForm{asym}, InvariantError);
  EXPECT_THROW(PseudoHermitianStructure(b, BilinearForm(Matrix::identity(Field::float64(), 2)),
                                        ComplexStructure(canonical_j(kQ, 1))),
               FieldError);
  EXPECT_THROW(tangent_lift_structure(PseudoHermitianStructure(
                   b, BilinearForm(Matrix::identity(kQ, 2)), ComplexStructure(Matrix::identity(kQ, 2)))),
               InvariantError);
}

}  // namespace
}  // namespace npk
