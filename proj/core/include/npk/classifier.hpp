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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "npk/defect.hpp"
#include "npk/hermitian.hpp"

namespace npk {

enum class Verdict {
  pseudo_kahler,
  strictly_nearly_pseudo_kahler,
  nearly_pseudo_kahler_integrable,
  almost_pseudo_kahler,
  none,
};

/// Stable machine identifier, e.g. "strictly-nearly-pseudo-kahler".
std::string_view verdict_slug(Verdict v);
/// Human-readable name, e.g. "strictly nearly pseudo-Kähler".
std::string_view verdict_text(Verdict v);
std::optional<Verdict> verdict_from_slug(std::string_view slug);
bool is_nearly_pseudo_kahler(Verdict v);

struct ClassifyOptions {
  double tol = 1e-9;  ///< relative zero tolerance on float64; ignored on exact fields
};

struct ClassificationReport {
  std::size_t dim = 0;
  Field field;
  std::vector<std::string> labels;
  double tol = 1e-9;

  Defect jacobi;
  Defect j_squared;      ///< J^2 + I
  Defect compatibility;  ///< g(J., J.) - g
  Signature signature;
  bool hermitian = false;
  std::string failing_axiom;  ///< empty when the Hermitian axioms and Jacobi hold

  /// The tensor defects below are only computed for almost pseudo-Hermitian
  /// inputs.
  bool evaluated = false;
  /// psi(e_i,e_j,e_k) + psi(e_k,e_j,e_i) over basis triples.
  Defect nk_symmetrized;
  /// psi(x, e_j, x) for x in {e_i} and {e_i + e_k}.
  Defect nk_polarized;
  /// (nabla_{e_i} J) e_j + (nabla_{e_j} J) e_i over basis pairs.
  Defect nk_nabla;
  /// max |N_J(e_i, e_j)|.
  Defect integrability;
  /// max |d omega(e_i, e_j, e_k)|.
  Defect omega_closed;

  bool nearly = false;
  bool integrable = false;
  bool closed = false;
  Verdict verdict = Verdict::none;
  /// Non-empty only when the defects contradict a known implication (nearly
  /// pseudo-Kähler with closed omega forces integrable J, strict structures
  /// have dimension >= 6, ...). Any entry indicates a bug.
  std::vector<std::string> consistency_violations;

  const Defect& nk_defect() const { return nk_symmetrized; }
};

/// Runs every check and assigns a verdict. Throws InternalError when the
/// psi-based and connection-based nearly pseudo-Kähler tests disagree.
ClassificationReport classify(const PseudoHermitianStructure& s, const ClassifyOptions& opts = {});

struct IdentityCheck {
  std::string name;
  std::string statement;
  Defect defect;
  bool holds = false;
};

struct LiftIdentityReport {
  std::size_t base_dim = 0;
  std::vector<IdentityCheck> checks;
  bool all_hold() const;
};

/// Compares the lifted Nijenhuis tensor, 2-form, d omega and psi against the
/// base quantities on every tuple of complete and vertical basis lifts.
/// Does not assume the base is nearly pseudo-Kähler.
LiftIdentityReport verify_lift_identities(const PseudoHermitianStructure& s, double tol = 1e-9);

struct TheoremOptions {
  double tol = 1e-9;
  std::size_t max_dim = 64;   ///< resource guard on the final dimension
  bool identities = true;     ///< run verify_lift_identities at every step
};

struct LevelSummary {
  std::size_t level = 0;
  std::size_t dim = 0;
  ClassificationReport report;
  std::optional<LiftIdentityReport> identities;  ///< from the previous level
  /// Complete lift of the parent's Nijenhuis witness pair, checked against
  /// N(X^c, Y^c) = N(X, Y)^c; set on strict chains only.
  std::optional<std::array<std::size_t, 2>> lifted_witness;
  std::optional<Vector> lifted_witness_value;
  bool witness_matches = false;
  bool holds = false;
};

struct ChainReport {
  bool base_strict = false;
  std::vector<LevelSummary> levels;  ///< levels[0] is the base
  bool holds() const;
};

/// Lifts k times and verifies at every level that the structure is almost
/// pseudo-Hermitian with signature (n, n, 0), nearly pseudo-Kähler, and (for a
/// strict base) still non-integrable. Throws InvariantError for a base that is
/// not nearly pseudo-Kähler, ResourceGuardError when dim * 2^k > max_dim.
ChainReport verify_theorem(const PseudoHermitianStructure& s, std::size_t k,
                           const TheoremOptions& opts = {});

/// k-fold tangent lift without verification.
PseudoHermitianStructure iterate_lift(const PseudoHermitianStructure& s, std::size_t k,
                                      double tol = 1e-9);

}  // namespace npk
