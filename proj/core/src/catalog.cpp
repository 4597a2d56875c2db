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

#include "npk/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace npk {

LieAlgebra sl2r() {
  const Field f = Field::rational();
  StructureConstants c(f, 3);
  c.set_bracket(0, 1, 2, f.from_int(2));
  c.set_bracket(0, 2, 1, f.from_int(2));
  c.set_bracket(1, 2, 0, f.from_int(-2));
  return LieAlgebra({"X1", "X2", "X3"}, std::move(c));
}

namespace {

LieAlgebra embed_algebra(const LieAlgebra& a, const Field& f) {
  StructureConstants c(f, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (const auto& t : a.bracket_terms(i, j)) c(i, j, t.k) = f.embed(t.coeff);
    }
  }
  return LieAlgebra(a.labels(), std::move(c));
}

}  // namespace

PseudoHermitianStructure sl2xsl2_nearly_kahler() {
  const Field f = Field::quadratic(3);
  const LieAlgebra sl2 = embed_algebra(sl2r(), f);
  LieAlgebra algebra = direct_sum(sl2, sl2);

  const Scalar inv_root3 = f.from_surd(0, Rational(1, 3));      // 1/sqrt3
  const Scalar two_inv_root3 = f.from_surd(0, Rational(2, 3));  // 2/sqrt3
  Matrix j = Matrix::zeros(f, 6, 6);
  Matrix g = Matrix::zeros(f, 6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t e = i;
    const std::size_t fi = 3 + i;
    j(e, e) = inv_root3;  // J E_i = (1/sqrt3) E_i + (2/sqrt3) F_i
    j(fi, e) = two_inv_root3;
    j(e, fi) = -two_inv_root3;  // J F_i = -(2/sqrt3) E_i - (1/sqrt3) F_i
    j(fi, fi) = -inv_root3;

    const int sign = i < 2 ? 1 : -1;
    g(e, fi) = g(fi, e) = f.from_rational(Rational(-sign, 3));
    g(e, e) = g(fi, fi) = f.from_rational(Rational(2 * sign, 3));
  }
  return PseudoHermitianStructure(std::move(algebra), BilinearForm(std::move(g)),
                                  ComplexStructure(std::move(j)));
}

PseudoHermitianStructure abelian_kahler(std::size_t m) {
  if (m == 0) throw std::invalid_argument("abelian_kahler: m must be positive");
  const Field f = Field::rational();
  const std::size_t n = 2 * m;
  Matrix j = Matrix::zeros(f, n, n);
  for (std::size_t i = 0; i < m; ++i) {
    j(m + i, i) = f.one();   // J e_i = e_{m+i}
    j(i, m + i) = -f.one();  // J e_{m+i} = -e_i
  }
  return PseudoHermitianStructure(LieAlgebra::abelian(f, n),
                                  BilinearForm(Matrix::identity(f, n)), ComplexStructure(std::move(j)));
}

PseudoHermitianStructure sl2xsl2_canonical() {
  const Field f = Field::rational();
  LieAlgebra algebra = direct_sum(sl2r(), sl2r());
  Matrix j = Matrix::zeros(f, 6, 6);
  Matrix g = Matrix::zeros(f, 6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    j(3 + i, i) = f.one();
    j(i, 3 + i) = -f.one();
    const int sign = i < 2 ? 1 : -1;
    g(i, i) = g(3 + i, 3 + i) = f.from_rational(Rational(2 * sign, 3));
  }
  return PseudoHermitianStructure(std::move(algebra), BilinearForm(std::move(g)),
                                  ComplexStructure(std::move(j)));
}

namespace {

CatalogEntry structure_entry(std::string name, std::string description, std::string provenance,
                             PseudoHermitianStructure s, Verdict verdict, Signature sig) {
  LieAlgebra a = s.algebra();
  return CatalogEntry{std::move(name), std::move(description), std::move(provenance),
                      std::move(a),    std::move(s),           verdict,
                      sig};
}

const std::map<std::string, std::function<CatalogEntry()>, std::less<>>& registry() {
  static const std::map<std::string, std::function<CatalogEntry()>, std::less<>> entries = {
      {"sl2r",
       [] {
         return CatalogEntry{"sl2r", "sl(2,R) with [X1,X2]=2X3, [X1,X3]=2X2, [X2,X3]=-2X1",
                             "classical", sl2r(), std::nullopt, std::nullopt, std::nullopt};
       }},
      {"paper-sl2xsl2",
       [] {
         return structure_entry(
             "paper-sl2xsl2",
             "strictly nearly pseudo-Kähler structure on sl(2,R)+sl(2,R) over Q(sqrt 3)",
             "literature example (left-invariant structure on SL(2,R)xSL(2,R))",
             sl2xsl2_nearly_kahler(), Verdict::strictly_nearly_pseudo_kahler, Signature{4, 2, 0});
       }},
      {"paper-sl2xsl2-tangent",
       [] {
         return structure_entry("paper-sl2xsl2-tangent",
                                "tangent lift of paper-sl2xsl2 (12-dim)",
                                "tangent lift of paper-sl2xsl2",
                                tangent_lift_structure(sl2xsl2_nearly_kahler()),
                                Verdict::strictly_nearly_pseudo_kahler, Signature{6, 6, 0});
       }},
      {"sl2xsl2-canonical",
       [] {
         return structure_entry("sl2xsl2-canonical",
                                "sl(2,R)+sl(2,R) with J: E_i -> F_i and a diagonal compatible metric",
                                "constructed baseline", sl2xsl2_canonical(), Verdict::none,
                                Signature{4, 2, 0});
       }},
      {"abelian-kahler-1",
       [] {
         return structure_entry("abelian-kahler-1", "abelian R^2, canonical J, Euclidean metric",
                                "constructed baseline", abelian_kahler(1), Verdict::pseudo_kahler,
                                Signature{2, 0, 0});
       }},
      {"abelian-kahler-2",
       [] {
         return structure_entry("abelian-kahler-2", "abelian R^4, canonical J, Euclidean metric",
                                "constructed baseline", abelian_kahler(2), Verdict::pseudo_kahler,
                                Signature{4, 0, 0});
       }},
      {"abelian-kahler-3",
       [] {
         return structure_entry("abelian-kahler-3", "abelian R^6, canonical J, Euclidean metric",
                                "constructed baseline", abelian_kahler(3), Verdict::pseudo_kahler,
                                Signature{6, 0, 0});
       }},
  };
  return entries;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : registry()) names.push_back(name);
  return names;
}

CatalogEntry catalog_entry(std::string_view name) {
  const auto& reg = registry();
  const auto it = reg.find(name);
  if (it == reg.end()) throw std::out_of_range("unknown catalog entry '" + std::string(name) + "'");
  return it->second();
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& [name, make] : registry()) out.push_back(make());
  return out;
}

}  // namespace npk
