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

#include "npk/hermitian.hpp"

#include <algorithm>
#include <cmath>

#include "npk/errors.hpp"

namespace npk {

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw DimensionError("bilinear form: Gram matrix must be square");
  for (std::size_t i = 0; i < gram_.rows(); ++i) {
    for (std::size_t j = i + 1; j < gram_.cols(); ++j) {
      if (!(gram_(i, j) == gram_(j, i))) {
        throw InvariantError("bilinear form is not symmetric at (" + std::to_string(i) + ", " +
                             std::to_string(j) + ")");
      }
    }
  }
}

ComplexStructure::ComplexStructure(Matrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw DimensionError("complex structure: matrix must be square");
}

Signature signature(const BilinearForm& form, double tol) {
  const std::size_t n = form.dim();
  Signature sig;
  if (n == 0) return sig;
  Matrix a = form.gram();
  const bool exact = a(0, 0).is_exact();
  const double threshold = exact ? 0.0 : tol * std::max(1.0, max_abs_double(a));
  auto nonzero = [&](const Scalar& x) {
    return exact ? !x.is_zero() : std::fabs(x.float_value()) > threshold;
  };
  auto swap_index = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    for (std::size_t t = 0; t < n; ++t) std::swap(a(p, t), a(q, t));
    for (std::size_t t = 0; t < n; ++t) std::swap(a(t, p), a(t, q));
  };

  for (std::size_t k = 0; k < n; ++k) {
    // Prefer a nonzero diagonal pivot (largest on float64).
    std::size_t pivot = n;
    double best = threshold;
    for (std::size_t r = k; r < n; ++r) {
      if (exact) {
        if (!a(r, r).is_zero()) {
          pivot = r;
          break;
        }
      } else if (std::fabs(a(r, r).float_value()) > best) {
        best = std::fabs(a(r, r).float_value());
        pivot = r;
      }
    }
    if (pivot == n) {
      // Zero diagonal: a nonzero off-diagonal a(r, s) lets e_r + e_s serve as
      // a pivot direction with value 2 a(r, s).
      std::size_t pr = n;
      std::size_t ps = n;
      for (std::size_t r = k; r < n && pr == n; ++r) {
        for (std::size_t s = r + 1; s < n; ++s) {
          if (nonzero(a(r, s))) {
            pr = r;
            ps = s;
            break;
          }
        }
      }
      if (pr == n) {
        sig.zero += n - k;
        break;
      }
      swap_index(k, pr);
      if (ps == k) ps = pr;
      for (std::size_t t = 0; t < n; ++t) a(k, t) += a(ps, t);
      for (std::size_t t = 0; t < n; ++t) a(t, k) += a(t, ps);
      pivot = k;
    }
    swap_index(k, pivot);
    const Scalar p = a(k, k);
    (p.sign() > 0 ? sig.positive : sig.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Scalar f = a(i, k) / p;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      a(i, k) = p - p;
      a(k, i) = p - p;
    }
  }
  return sig;
}

Matrix fundamental_two_form(const BilinearForm& metric, const ComplexStructure& j) {
  return j.matrix().transpose() * metric.gram();
}

PseudoHermitianStructure::PseudoHermitianStructure(LieAlgebra algebra, BilinearForm metric,
                                                   ComplexStructure jstruct, double tol)
    : algebra_(std::move(algebra)), metric_(std::move(metric)), jstruct_(std::move(jstruct)) {
  const std::size_t n = algebra_.dim();
  if (metric_.dim() != n || jstruct_.dim() != n) {
    throw DimensionError("metric and complex structure must match the algebra dimension " +
                         std::to_string(n));
  }
  if (n == 0 || n % 2 != 0) {
    throw DimensionError("almost complex structures need even dimension, got " + std::to_string(n));
  }
  const Field& f = algebra_.field();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!f.contains(metric_.gram()(i, j)) || !f.contains(jstruct_.matrix()(i, j))) {
        throw FieldError("metric/jstruct entries must lie in the algebra's field " + f.name());
      }
    }
  }
  signature_ = signature(metric_, tol);
  if (!signature_.nondegenerate()) {
    throw InvariantError("metric is degenerate (signature has " + std::to_string(signature_.zero) +
                         " zero directions)");
  }
  omega_ = fundamental_two_form(metric_, jstruct_);
  const double sj = std::max(1.0, max_abs_double(jstruct_.matrix()));
  scale_ = std::max(1.0, algebra_.constant_scale()) *
           std::max(1.0, max_abs_double(metric_.gram())) * sj * sj * sj;
}

Defect check_complex_structure(const PseudoHermitianStructure& s) {
  const Matrix& j = s.jstruct().matrix();
  const Matrix sq = j * j + Matrix::identity(s.field(), s.dim());
  Defect d = Defect::zero(s.field());
  for (std::size_t r = 0; r < s.dim(); ++r) {
    for (std::size_t c = 0; c < s.dim(); ++c) d.consider(sq(r, c), {r, c});
  }
  const double sj = std::max(1.0, max_abs_double(j));
  d.scale = sj * sj;
  return d;
}

Defect check_compatibility(const PseudoHermitianStructure& s) {
  const Matrix& j = s.jstruct().matrix();
  const Matrix& g = s.metric().gram();
  const Matrix diff = j.transpose() * g * j - g;
  Defect d = Defect::zero(s.field());
  for (std::size_t r = 0; r < s.dim(); ++r) {
    for (std::size_t c = 0; c < s.dim(); ++c) d.consider(diff(r, c), {r, c});
  }
  const double sj = std::max(1.0, max_abs_double(j));
  d.scale = sj * sj * std::max(1.0, max_abs_double(g));
  return d;
}

bool is_almost_pseudo_hermitian(const PseudoHermitianStructure& s, double tol) {
  return check_complex_structure(s).vanishes(tol) && check_compatibility(s).vanishes(tol) &&
         s.metric_signature().nondegenerate();
}

PseudoHermitianStructure tangent_lift_structure(const PseudoHermitianStructure& s, double tol) {
  const auto jsq = check_complex_structure(s);
  if (!jsq.vanishes(tol)) {
    throw InvariantError("tangent_lift_structure: J^2 != -id (defect " + jsq.value.to_string() + ")");
  }
  const auto compat = check_compatibility(s);
  if (!compat.vanishes(tol)) {
    throw InvariantError("tangent_lift_structure: g and J are not compatible (defect " +
                         compat.value.to_string() + ")");
  }
  const std::size_t n = s.dim();
  const Field& f = s.field();
  LieAlgebra lifted = tangent_lift_algebra(s.algebra(), tol);
  Matrix jhat = Matrix::zeros(f, 2 * n, 2 * n);
  Matrix ghat = Matrix::zeros(f, 2 * n, 2 * n);
  const Matrix& j = s.jstruct().matrix();
  const Matrix& g = s.metric().gram();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      jhat(r, c) = j(r, c);
      jhat(n + r, n + c) = j(r, c);
      ghat(r, n + c) = g(r, c);
      ghat(n + c, r) = g(r, c);
    }
  }
  return PseudoHermitianStructure(std::move(lifted), BilinearForm(std::move(ghat)),
                                  ComplexStructure(std::move(jhat)), tol);
}

}  // namespace npk
