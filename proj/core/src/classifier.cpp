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

#include "npk/classifier.hpp"

#include <algorithm>
#include <cmath>

#include "npk/errors.hpp"
#include "npk/tensor_calculus.hpp"

namespace npk {

std::string_view verdict_slug(Verdict v) {
  switch (v) {
    case Verdict::pseudo_kahler:
      return "pseudo-kahler";
    case Verdict::strictly_nearly_pseudo_kahler:
      return "strictly-nearly-pseudo-kahler";
    case Verdict::nearly_pseudo_kahler_integrable:
      return "nearly-pseudo-kahler-integrable";
    case Verdict::almost_pseudo_kahler:
      return "almost-pseudo-kahler";
    case Verdict::none:
      break;
  }
  return "none";
}

std::string_view verdict_text(Verdict v) {
  switch (v) {
    case Verdict::pseudo_kahler:
      return "pseudo-Kähler";
    case Verdict::strictly_nearly_pseudo_kahler:
      return "strictly nearly pseudo-Kähler";
    case Verdict::nearly_pseudo_kahler_integrable:
      return "nearly pseudo-Kähler (integrable)";
    case Verdict::almost_pseudo_kahler:
      return "almost pseudo-Kähler";
    case Verdict::none:
      break;
  }
  return "none";
}

std::optional<Verdict> verdict_from_slug(std::string_view slug) {
  for (Verdict v : {Verdict::pseudo_kahler, Verdict::strictly_nearly_pseudo_kahler,
                    Verdict::nearly_pseudo_kahler_integrable, Verdict::almost_pseudo_kahler,
                    Verdict::none}) {
    if (verdict_slug(v) == slug) return v;
  }
  return std::nullopt;
}

bool is_nearly_pseudo_kahler(Verdict v) {
  return v == Verdict::pseudo_kahler || v == Verdict::strictly_nearly_pseudo_kahler ||
         v == Verdict::nearly_pseudo_kahler_integrable;
}

namespace {

Defect symmetrized_psi_defect(const BasisTensors& t, const Field& f, double scale) {
  const std::size_t n = t.dim();
  Defect d = Defect::zero(f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = i; k < n; ++k) d.consider(t.psi(i, j, k) + t.psi(k, j, i), {i, j, k});
    }
  }
  d.scale = scale;
  return d;
}

// psi(x, y, x) = 0 for all x, y is quadratic in x, so it suffices to test
// x in {e_i} and {e_i + e_k}; evaluated through the vector-level formulas.
Defect polarized_psi_defect(const PseudoHermitianStructure& s) {
  const std::size_t n = s.dim();
  const Field& f = s.field();
  Defect d = Defect::zero(f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i; k < n; ++k) {
      Vector x = Vector::basis(f, n, i);
      if (k != i) x[k] = f.one();
      for (std::size_t j = 0; j < n; ++j) {
        const Vector y = Vector::basis(f, n, j);
        d.consider(psi(s, x, y, x), {i, k, j});
      }
    }
  }
  d.scale = 4.0 * s.scale();
  return d;
}

Defect nabla_defect(const PseudoHermitianStructure& s) {
  const std::size_t n = s.dim();
  const ConnectionTable gamma = levi_civita(s);
  const NablaJTable table(s, gamma);
  Defect d = Defect::zero(s.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) d.consider(table(i, j) + table(j, i), {i, j});
  }
  d.scale = gamma.scale() * std::max(1.0, max_abs_double(s.jstruct().matrix()));
  return d;
}

}  // namespace

ClassificationReport classify(const PseudoHermitianStructure& s, const ClassifyOptions& opts) {
  ClassificationReport r;
  r.dim = s.dim();
  r.field = s.field();
  r.labels = s.algebra().labels();
  r.tol = opts.tol;
  const double tol = opts.tol;

  const auto jac = jacobi(s.algebra());
  r.jacobi = Defect::zero(s.field());
  if (jac.witness) {
    const auto& w = *jac.witness;
    r.jacobi.consider(w.value, {w.i, w.j, w.l, w.k});
  }
  r.jacobi.scale = std::max(1.0, s.algebra().constant_scale() * s.algebra().constant_scale());
  r.j_squared = check_complex_structure(s);
  r.compatibility = check_compatibility(s);
  r.signature = s.metric_signature();

  if (!r.jacobi.vanishes(tol)) {
    r.failing_axiom = "jacobi";
  } else if (!r.j_squared.vanishes(tol)) {
    r.failing_axiom = "complex-structure";
  } else if (!r.compatibility.vanishes(tol)) {
    r.failing_axiom = "compatibility";
  } else if (!r.signature.nondegenerate()) {
    r.failing_axiom = "nondegeneracy";
  }
  r.hermitian = r.failing_axiom.empty();
  if (!r.hermitian) {
    r.verdict = Verdict::none;
    return r;
  }

  r.evaluated = true;
  const BasisTensors t(s);
  const Field& f = s.field();
  r.nk_symmetrized = symmetrized_psi_defect(t, f, s.scale());
  r.nk_polarized = polarized_psi_defect(s);
  r.nk_nabla = nabla_defect(s);

  r.integrability = Defect::zero(f);
  r.omega_closed = Defect::zero(f);
  for (std::size_t i = 0; i < r.dim; ++i) {
    for (std::size_t j = i + 1; j < r.dim; ++j) {
      r.integrability.consider(t.nijenhuis(i, j), {i, j});
      for (std::size_t k = j + 1; k < r.dim; ++k) r.omega_closed.consider(t.d_omega(i, j, k), {i, j, k});
    }
  }
  r.integrability.scale = s.scale();
  r.omega_closed.scale = s.scale();

  const bool sym = r.nk_symmetrized.vanishes(tol);
  const bool pol = r.nk_polarized.vanishes(tol);
  const bool nab = r.nk_nabla.vanishes(tol);
  if (sym != pol || sym != nab) {
    throw InternalError("nearly pseudo-Kähler routes disagree: symmetrized psi " +
                        r.nk_symmetrized.value.to_string() + ", polarized psi " +
                        r.nk_polarized.value.to_string() + ", connection " +
                        r.nk_nabla.value.to_string());
  }
  r.nearly = sym;
  r.integrable = r.integrability.vanishes(tol);
  r.closed = r.omega_closed.vanishes(tol);

  if (r.integrable && r.closed) {
    r.verdict = Verdict::pseudo_kahler;
  } else if (r.nearly && !r.integrable) {
    r.verdict = Verdict::strictly_nearly_pseudo_kahler;
  } else if (r.nearly) {
    r.verdict = Verdict::nearly_pseudo_kahler_integrable;
  } else if (r.closed) {
    r.verdict = Verdict::almost_pseudo_kahler;
  } else {
    r.verdict = Verdict::none;
  }

  if (r.nearly && r.closed && !r.integrable) {
    r.consistency_violations.push_back(
        "nearly pseudo-Kähler with closed omega but non-integrable J");
  }
  if (r.verdict == Verdict::pseudo_kahler && !r.nearly) {
    r.consistency_violations.push_back("pseudo-Kähler but (nabla_X J) X != 0");
  }
  if (r.verdict == Verdict::strictly_nearly_pseudo_kahler && r.dim < 6) {
    r.consistency_violations.push_back("strictly nearly pseudo-Kähler in dimension " +
                                       std::to_string(r.dim) + " < 6");
  }
  return r;
}

bool LiftIdentityReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

LiftIdentityReport verify_lift_identities(const PseudoHermitianStructure& s, double tol) {
  const std::size_t n = s.dim();
  const Field& f = s.field();
  const PseudoHermitianStructure lifted = tangent_lift_structure(s, tol);
  const BasisTensors base(s);
  const BasisTensors up(lifted);
  const Matrix& om = s.omega();
  const Matrix& omh = lifted.omega();
  const double scale = std::max(s.scale(), lifted.scale());

  LiftIdentityReport report;
  report.base_dim = n;
  auto add = [&](std::string name, std::string statement, Defect d) {
    d.scale = scale;
    const bool holds = d.vanishes(tol);
    report.checks.push_back({std::move(name), std::move(statement), std::move(d), holds});
  };
  const auto c = [](std::size_t i) { return i; };
  const auto v = [n](std::size_t i) { return n + i; };

  Defect n_cc = Defect::zero(f), n_vv = Defect::zero(f), n_cv = Defect::zero(f);
  Defect w_zero = Defect::zero(f), w_cv = Defect::zero(f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      n_cc.consider(up.nijenhuis(c(i), c(j)) - complete_lift(base.nijenhuis(i, j)), {i, j});
      n_vv.consider(up.nijenhuis(v(i), v(j)), {i, j});
      n_cv.consider(up.nijenhuis(c(i), v(j)) - vertical_lift(base.nijenhuis(i, j)), {i, j});
      w_zero.consider(omh(c(i), c(j)), {i, j, 0});
      w_zero.consider(omh(v(i), v(j)), {i, j, 1});
      w_cv.consider(omh(c(i), v(j)) - om(i, j), {i, j});
    }
  }
  add("N_cc", "N^(X^c,Y^c) = N(X,Y)^c", std::move(n_cc));
  add("N_vv", "N^(X^v,Y^v) = 0", std::move(n_vv));
  add("N_cv", "N^(X^c,Y^v) = N(X,Y)^v", std::move(n_cv));
  add("omega_cc_vv", "w^(X^c,Y^c) = w^(X^v,Y^v) = 0", std::move(w_zero));
  add("omega_cv", "w^(X^c,Y^v) = w(X,Y)", std::move(w_cv));

  Defect dw_zero = Defect::zero(f), dw_ccv = Defect::zero(f);
  // psi^ on the eight (c|v)^3 patterns; expected value psi(X,Y,Z) or 0.
  struct Pattern {
    const char* name;
    const char* statement;
    bool a_v, b_v, c_v;
    bool equals_psi;
  };
  static constexpr Pattern patterns[] = {
      {"psi_ccc", "psi^(X^c,Y^c,Z^c) = 0", false, false, false, false},
      {"psi_ccv", "psi^(X^c,Y^c,Z^v) = psi(X,Y,Z)", false, false, true, true},
      {"psi_cvc", "psi^(X^c,Y^v,Z^c) = psi(X,Y,Z)", false, true, false, true},
      {"psi_cvv", "psi^(X^c,Y^v,Z^v) = 0", false, true, true, false},
      {"psi_vcc", "psi^(X^v,Y^c,Z^c) = psi(X,Y,Z)", true, false, false, true},
      {"psi_vcv", "psi^(X^v,Y^c,Z^v) = 0", true, false, true, false},
      {"psi_vvc", "psi^(X^v,Y^v,Z^c) = 0", true, true, false, false},
      {"psi_vvv", "psi^(X^v,Y^v,Z^v) = 0", true, true, true, false},
  };
  std::vector<Defect> psi_defects(std::size(patterns), Defect::zero(f));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        dw_zero.consider(up.d_omega(c(i), c(j), c(k)), {i, j, k, 0});
        dw_zero.consider(up.d_omega(v(i), v(j), v(k)), {i, j, k, 1});
        dw_zero.consider(up.d_omega(c(i), v(j), v(k)), {i, j, k, 2});
        dw_ccv.consider(up.d_omega(c(i), c(j), v(k)) - base.d_omega(i, j, k), {i, j, k});
        for (std::size_t p = 0; p < std::size(patterns); ++p) {
          const auto& pat = patterns[p];
          const Scalar& lifted_value =
              up.psi(pat.a_v ? v(i) : c(i), pat.b_v ? v(j) : c(j), pat.c_v ? v(k) : c(k));
          psi_defects[p].consider(pat.equals_psi ? lifted_value - base.psi(i, j, k) : lifted_value,
                                  {i, j, k});
        }
      }
    }
  }
  add("domega_zero",
      "dw^(X^c,Y^c,Z^c) = dw^(X^v,Y^v,Z^v) = dw^(X^c,Y^v,Z^v) = 0", std::move(dw_zero));
  add("domega_ccv", "dw^(X^c,Y^c,Z^v) = dw(X,Y,Z)", std::move(dw_ccv));
  for (std::size_t p = 0; p < std::size(patterns); ++p) {
    add(patterns[p].name, patterns[p].statement, std::move(psi_defects[p]));
  }
  return report;
}

bool ChainReport::holds() const {
  return !levels.empty() &&
         std::all_of(levels.begin(), levels.end(), [](const auto& l) { return l.holds; });
}

PseudoHermitianStructure iterate_lift(const PseudoHermitianStructure& s, std::size_t k,
                                      double tol) {
  PseudoHermitianStructure cur = s;
  for (std::size_t level = 0; level < k; ++level) cur = tangent_lift_structure(cur, tol);
  return cur;
}

namespace {

void check_guard(std::size_t dim, std::size_t k, std::size_t max_dim) {
  std::size_t final_dim = dim;
  for (std::size_t level = 0; level < k; ++level) {
    final_dim *= 2;
    if (final_dim > max_dim) {
      throw ResourceGuardError("lifting " + std::to_string(k) + " times reaches dimension " +
                               std::to_string(dim << k) + ", above the cap of " +
                               std::to_string(max_dim));
    }
  }
}

}  // namespace

ChainReport verify_theorem(const PseudoHermitianStructure& s, std::size_t k,
                           const TheoremOptions& opts) {
  if (k == 0) throw std::invalid_argument("verify_theorem: k must be at least 1");
  check_guard(s.dim(), k, opts.max_dim);
  const ClassifyOptions copts{opts.tol};

  ChainReport chain;
  LevelSummary base;
  base.level = 0;
  base.dim = s.dim();
  base.report = classify(s, copts);
  if (!base.report.hermitian || !base.report.nearly) {
    throw InvariantError("verify_theorem: base structure is not nearly pseudo-Kähler (verdict: " +
                         std::string(verdict_text(base.report.verdict)) + ")");
  }
  chain.base_strict = !base.report.integrable;
  base.holds = base.report.consistency_violations.empty();
  chain.levels.push_back(std::move(base));

  PseudoHermitianStructure cur = s;
  for (std::size_t level = 1; level <= k; ++level) {
    LevelSummary summary;
    summary.level = level;
    if (opts.identities) summary.identities = verify_lift_identities(cur, opts.tol);
    const auto& parent = chain.levels.back().report;
    PseudoHermitianStructure next = tangent_lift_structure(cur, opts.tol);
    summary.dim = next.dim();
    summary.report = classify(next, copts);

    const auto& r = summary.report;
    const std::size_t half = next.dim() / 2;
    bool ok = r.hermitian && r.nearly && r.consistency_violations.empty() &&
              r.signature == Signature{half, half, 0};
    if (summary.identities) ok = ok && summary.identities->all_hold();
    if (chain.base_strict) {
      ok = ok && !r.integrable;
      // Parent witness (i, j) lifts to (i^c, j^c): complete lifts keep indices.
      if (parent.integrability.at.size() == 2) {
        const std::size_t i = parent.integrability.at[0];
        const std::size_t j = parent.integrability.at[1];
        const Field& f = next.field();
        const Vector lifted = nijenhuis(next, Vector::basis(f, next.dim(), i),
                                        Vector::basis(f, next.dim(), j));
        const Vector expected = complete_lift(nijenhuis(cur, Vector::basis(f, cur.dim(), i),
                                                        Vector::basis(f, cur.dim(), j)));
        summary.lifted_witness = std::array<std::size_t, 2>{i, j};
        Defect diff = Defect::zero(f);
        diff.consider(lifted - expected, {i, j});
        diff.scale = next.scale();
        summary.witness_matches = diff.vanishes(opts.tol) && !lifted.is_zero();
        summary.lifted_witness_value = lifted;
        ok = ok && summary.witness_matches;
      } else {
        ok = false;
      }
    }
    summary.holds = ok;
    chain.levels.push_back(std::move(summary));
    cur = std::move(next);
  }
  return chain;
}

}  // namespace npk
