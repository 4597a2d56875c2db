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
#include <random>

#include "npk/hermitian.hpp"
#include "npk/lie_algebra.hpp"

namespace npk {

/// Re-expresses every constant of `a` in `field` (rationals embed anywhere,
/// quadratic values round to float64).
LieAlgebra change_field(const LieAlgebra& a, const Field& field);
PseudoHermitianStructure change_field(const PseudoHermitianStructure& s, const Field& field);

/// Random compatible (g, J) on an even-dimensional algebra: J = P J0 P^-1 and
/// g(x, y) = g0(P^-1 x, P^-1 y) for a random invertible P, with
/// J0 = [[0,-I],[I,0]] and g0 = diag(D, D), D a random +-1 diagonal.
/// On exact fields P has small integer entries; on float64 entries are
/// uniform in [-1, 1] and badly conditioned draws are rejected.
PseudoHermitianStructure random_compatible_structure(const LieAlgebra& a, std::mt19937_64& rng);

/// Vector with small random integer coordinates (exact) or uniform [-1, 1]
/// coordinates (float64).
Vector random_vector(const Field& field, std::size_t n, std::mt19937_64& rng);

}  // namespace npk
