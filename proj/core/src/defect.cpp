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

#include "npk/defect.hpp"

namespace npk {

void Defect::consider(const Scalar& v, std::vector<std::size_t> where) {
  Scalar a = v.abs();
  if (compare(a, value) > 0) {
    value = std::move(a);
    at = std::move(where);
    witness = v;
    vector.reset();
  }
}

void Defect::consider(const Vector& v, std::vector<std::size_t> where) {
  if (v.size() == 0) return;
  std::size_t best = 0;
  Scalar best_abs = v[0].abs();
  for (std::size_t k = 1; k < v.size(); ++k) {
    Scalar a = v[k].abs();
    if (compare(a, best_abs) > 0) {
      best_abs = std::move(a);
      best = k;
    }
  }
  if (compare(best_abs, value) > 0) {
    value = std::move(best_abs);
    at = std::move(where);
    witness = v[best];
    vector = v;
  }
}

}  // namespace npk
