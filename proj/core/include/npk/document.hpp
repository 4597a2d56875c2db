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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "npk/catalog.hpp"
#include "npk/classifier.hpp"
#include "npk/hermitian.hpp"
#include "npk/lie_algebra.hpp"

namespace npk {

/// In-memory form of a structure document.
///
///   { "name": optional string,
///     "field": "rational" | {"quadratic": d} | "float64",
///     "dim": n, "labels": [...],
///     "brackets": [ {"i": i, "j": j, "coeffs": {"k": scalar, ...}}, ... ],
///     "metric": n x n rows (upper triangle suffices),
///     "jstruct": n x n rows, column j = J(e_j),
///     "expected": {"verdict": slug, "signature": [p, q, z]} }
///
/// Indices are 0-based. Scalars are "p/q" strings (or JSON integers) on
/// exact fields, ["p/q", "r/s"] meaning p/q + (r/s) sqrt(d) on quadratic
/// fields, and JSON numbers on float64. Brackets list i < j; the antisymmetric
/// partner is implied unless given explicitly.
struct StructureDocument {
  std::string name;
  Field field;
  std::vector<std::string> labels;
  StructureConstants constants{Field(), 0};
  std::optional<Matrix> metric;
  std::optional<Matrix> jstruct;
  std::optional<Verdict> expected_verdict;
  std::optional<Signature> expected_signature;

  std::size_t dim() const { return labels.size(); }
  bool has_structure() const { return metric.has_value() && jstruct.has_value(); }
};

/// Throws ParseError naming the offending field (e.g. "brackets[2].coeffs.1").
StructureDocument parse_document(std::string_view text);
StructureDocument read_document(const std::filesystem::path& path);

/// Canonical, byte-deterministic serialization (2-space indented JSON).
std::string write_document(const StructureDocument& doc);
void save_document(const StructureDocument& doc, const std::filesystem::path& path);

StructureDocument to_document(const LieAlgebra& a);
StructureDocument to_document(const PseudoHermitianStructure& s);
StructureDocument to_document(const CatalogEntry& e);

/// Throws InvariantError for non-antisymmetric constants.
LieAlgebra build_algebra(const StructureDocument& doc);
/// Throws InvariantError / DimensionError for structures that cannot be
/// represented (missing blocks, asymmetric or degenerate metric, odd dimension).
PseudoHermitianStructure build_structure(const StructureDocument& doc, double tol = 1e-9);

/// Scalar wire format, exposed for reports: "p/q", ["p/q","r/s"] or a number.
std::string scalar_to_json(const Scalar& s);
Scalar scalar_from_json(std::string_view json_text, const Field& field);

}  // namespace npk
