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

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

namespace npk {

using Rational = mpq_class;

enum class FieldKind { rational, quadratic, float64 };

/// An element of the working field: an exact rational, an exact element
/// a + b*sqrt(d) of a real quadratic extension, or a binary64 float.
///
/// Rational parts are kept canonical (lowest terms, positive denominator).
/// Arithmetic between different variants, or between quadratic values with
/// different radicands, throws FieldError.
class Scalar {
 public:
  Scalar() : rep_(Rational(0)) {}

  static Scalar rational(Rational q);
  static Scalar rational(long num, long den = 1);
  /// a + b*sqrt(d); d must be a square-free integer >= 2.
  static Scalar quadratic(Rational a, Rational b, std::int64_t d);
  static Scalar real(double v);

  FieldKind kind() const;
  bool is_rational() const { return kind() == FieldKind::rational; }
  bool is_quadratic() const { return kind() == FieldKind::quadratic; }
  bool is_float() const { return kind() == FieldKind::float64; }
  bool is_exact() const { return !is_float(); }

  /// Rational part a (the whole value for the rational variant).
  const Rational& rational_part() const;
  /// Surd coefficient b; zero for the rational variant.
  Rational surd_part() const;
  /// d for the quadratic variant, 0 otherwise.
  std::int64_t radicand() const;
  /// Raw binary64 value of the float variant.
  double float_value() const;

  bool is_zero() const;
  /// Exact sign for rational and quadratic values.
  int sign() const;
  Scalar abs() const;
  /// Nearest binary64 approximation. Reporting only.
  double to_double() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Value equality. A quadratic value with b = 0 equals the rational a.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "p/q", "a + b*sqrt(d)", or the shortest round-trip float literal.
  std::string to_string() const;

 private:
  struct Quadratic {
    Rational a;
    Rational b;
    std::int64_t d;
  };
  using Rep = std::variant<Rational, Quadratic, double>;

  explicit Scalar(Rep rep) : rep_(std::move(rep)) {}

  Rep rep_;
};

/// Exact sign of x - y. Both operands must share a variant.
int compare(const Scalar& x, const Scalar& y);
/// Larger of |x| and |y| by exact comparison.
const Scalar& max_abs_of(const Scalar& x, const Scalar& y);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// The scalar field of one computation: fixes the variant and, for quadratic
/// fields, the radicand. All constants entering a pipeline come from here.
class Field {
 public:
  Field() = default;

  static Field rational() { return Field(FieldKind::rational, 0); }
  static Field quadratic(std::int64_t d);
  static Field float64() { return Field(FieldKind::float64, 0); }

  FieldKind kind() const { return kind_; }
  std::int64_t radicand() const { return radicand_; }
  bool is_exact() const { return kind_ != FieldKind::float64; }

  Scalar zero() const { return from_rational(Rational(0)); }
  Scalar one() const { return from_rational(Rational(1)); }
  Scalar from_int(long v) const { return from_rational(Rational(v)); }
  Scalar from_rational(const Rational& q) const;
  /// a + b*sqrt(d); quadratic fields only.
  Scalar from_surd(const Rational& a, const Rational& b) const;
  Scalar from_double(double v) const;

  /// Re-expresses `s` in this field. Rationals embed into quadratic fields and
  /// into float64; anything else must already belong to the field.
  Scalar embed(const Scalar& s) const;
  bool contains(const Scalar& s) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(FieldKind kind, std::int64_t d) : kind_(kind), radicand_(d) {}

  FieldKind kind_ = FieldKind::rational;
  std::int64_t radicand_ = 0;
};

bool is_square_free(std::int64_t d);

/// Zero test used by every defect check: exact zero on exact fields, and
/// |x| <= tol * scale on float64.
bool negligible(const Scalar& x, double scale, double tol);

}  // namespace npk
