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
#include <vector>

#include "npk/linalg.hpp"
#include "npk/scalar.hpp"

namespace npk {

/// Max-norm of a quantity that should vanish, with the basis tuple where the
/// maximum is attained.
struct Defect {
  Scalar value;                   ///< max-norm, >= 0
  std::vector<std::size_t> at;    ///< witness tuple; empty while value is zero
  Scalar witness;                 ///< signed value (scalar quantities) or largest component
  std::optional<Vector> vector;   ///< full value at the witness (vector quantities)
  double scale = 1.0;             ///< magnitude bound of the contributing terms (float64)

  static Defect zero(const Field& field) { return Defect{field.zero(), {}, field.zero(), {}, 1.0}; }

  /// Keeps the larger of the current defect and |v| at `where`.
  void consider(const Scalar& v, std::vector<std::size_t> where);
  void consider(const Vector& v, std::vector<std::size_t> where);

  bool vanishes(double tol) const { return negligible(value, scale, tol); }
};

}  // namespace npk
