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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "npk/classifier.hpp"
#include "npk/hermitian.hpp"
#include "npk/lie_algebra.hpp"

namespace npk {

/// sl(2,R) over Q with [X1,X2] = 2X3, [X1,X3] = 2X2, [X2,X3] = -2X1.
LieAlgebra sl2r();

/// Strictly nearly pseudo-Kähler structure on sl(2,R) + sl(2,R) over Q(sqrt 3),
/// basis E1..E3, F1..F3:
///   J E_i = (2 F_i + E_i)/sqrt3,   J F_i = -(2 E_i + F_i)/sqrt3,
///   g(E_i,F_i) = -1/3 (i = 1,2), 1/3 (i = 3),
///   g(E_i,E_i) = g(F_i,F_i) = 2/3 (i = 1,2), -2/3 (i = 3).
PseudoHermitianStructure sl2xsl2_nearly_kahler();

/// R^{2m} abelian, J0 = [[0,-I],[I,0]], Euclidean metric. Pseudo-Kähler.
PseudoHermitianStructure abelian_kahler(std::size_t m);

/// sl(2,R) + sl(2,R) with J0: E_i -> F_i, F_i -> -E_i and the diagonal part of
/// the metric above. Compatible, but neither nearly pseudo-Kähler nor
/// integrable nor closed.
PseudoHermitianStructure sl2xsl2_canonical();

struct CatalogEntry {
  std::string name;
  std::string description;
  std::string provenance;
  LieAlgebra algebra;
  std::optional<PseudoHermitianStructure> structure;
  std::optional<Verdict> expected_verdict;
  std::optional<Signature> expected_signature;
};

/// Sorted list of entry names.
std::vector<std::string> catalog_names();
/// Throws std::out_of_range for an unknown name.
CatalogEntry catalog_entry(std::string_view name);
std::vector<CatalogEntry> catalog();

}  // namespace npk
