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

#include "npk/scalar.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "npk/errors.hpp"

namespace npk {
namespace {

int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

int sgn(double v) { return (v > 0) - (v < 0); }

// Correctly rounded binary64 value of an exact rational.
double nearest_double(const Rational& q) {
  const double d = q.get_d();  // truncates toward zero
  if (!std::isfinite(d)) return d;
  const double up = std::nextafter(d, q > 0 ? INFINITY : -INFINITY);
  if (!std::isfinite(up)) return d;
  const Rational err_d = abs(q - Rational(d));
  const Rational err_up = abs(q - Rational(up));
  return err_up < err_d ? up : d;
}

std::string double_to_string(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

[[noreturn]] void variant_mismatch() {
  throw FieldError("scalar variant mismatch in arithmetic");
}

}  // namespace

bool is_square_free(std::int64_t d) {
  if (d < 2) return false;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

Scalar Scalar::rational(Rational q) {
  q.canonicalize();
  return Scalar(Rep(std::move(q)));
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw FieldError("zero denominator");
  return rational(Rational(num, den));
}

Scalar Scalar::quadratic(Rational a, Rational b, std::int64_t d) {
  if (!is_square_free(d)) {
    throw FieldError("radicand must be a square-free integer >= 2, got " + std::to_string(d));
  }
  a.canonicalize();
  b.canonicalize();
  return Scalar(Rep(Quadratic{std::move(a), std::move(b), d}));
}

Scalar Scalar::real(double v) { return Scalar(Rep(v)); }

FieldKind Scalar::kind() const {
  switch (rep_.index()) {
    case 0:
      return FieldKind::rational;
    case 1:
      return FieldKind::quadratic;
    default:
      return FieldKind::float64;
  }
}

const Rational& Scalar::rational_part() const {
  if (const auto* q = std::get_if<Rational>(&rep_)) return *q;
  if (const auto* x = std::get_if<Quadratic>(&rep_)) return x->a;
  throw FieldError("float scalar has no rational part");
}

Rational Scalar::surd_part() const {
  if (const auto* x = std::get_if<Quadratic>(&rep_)) return x->b;
  if (std::holds_alternative<Rational>(rep_)) return Rational(0);
  throw FieldError("float scalar has no surd part");
}

std::int64_t Scalar::radicand() const {
  if (const auto* x = std::get_if<Quadratic>(&rep_)) return x->d;
  return 0;
}

double Scalar::float_value() const {
  if (const auto* v = std::get_if<double>(&rep_)) return *v;
  throw FieldError("exact scalar has no raw float value");
}

bool Scalar::is_zero() const {
  switch (rep_.index()) {
    case 0:
      return sgn(std::get<0>(rep_)) == 0;
    case 1: {
      const auto& x = std::get<1>(rep_);
      return sgn(x.a) == 0 && sgn(x.b) == 0;
    }
    default:
      return std::get<2>(rep_) == 0.0;
  }
}

int Scalar::sign() const {
  switch (rep_.index()) {
    case 0:
      return sgn(std::get<0>(rep_));
    case 1: {
      // a + b*sqrt(d): agree -> common sign; disagree -> compare a^2 with d*b^2.
      const auto& x = std::get<1>(rep_);
      const int sa = sgn(x.a);
      const int sb = sgn(x.b);
      if (sb == 0) return sa;
      if (sa == 0) return sb;
      if (sa == sb) return sa;
      const Rational lhs = x.a * x.a;
      const Rational rhs = Rational(x.d) * x.b * x.b;
      const int c = cmp(lhs, rhs);
      if (c > 0) return sa;
      if (c < 0) return sb;
      return 0;  // unreachable for square-free d
    }
    default:
      return sgn(std::get<2>(rep_));
  }
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

double Scalar::to_double() const {
  switch (rep_.index()) {
    case 0:
      return nearest_double(std::get<0>(rep_));
    case 1: {
      const auto& x = std::get<1>(rep_);
      if (sgn(x.b) == 0) return nearest_double(x.a);
      mpf_class root(static_cast<double>(x.d), 512);
      root = sqrt(root);
      mpf_class value(0, 512);
      value = mpf_class(x.a, 512) + mpf_class(x.b, 512) * root;
      return nearest_double(Rational(value));
    }
    default:
      return std::get<2>(rep_);
  }
}

Scalar Scalar::operator-() const {
  switch (rep_.index()) {
    case 0:
      return Scalar(Rep(Rational(-std::get<0>(rep_))));
    case 1: {
      const auto& x = std::get<1>(rep_);
      return Scalar(Rep(Quadratic{-x.a, -x.b, x.d}));
    }
    default:
      return Scalar(Rep(-std::get<2>(rep_)));
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (rep_.index() != o.rep_.index()) variant_mismatch();
  switch (rep_.index()) {
    case 0:
      std::get<0>(rep_) += std::get<0>(o.rep_);
      break;
    case 1: {
      auto& x = std::get<1>(rep_);
      const auto& y = std::get<1>(o.rep_);
      if (x.d != y.d) throw FieldError("radicand mismatch");
      x.a += y.a;
      x.b += y.b;
      break;
    }
    default:
      std::get<2>(rep_) += std::get<2>(o.rep_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (rep_.index() != o.rep_.index()) variant_mismatch();
  switch (rep_.index()) {
    case 0:
      std::get<0>(rep_) -= std::get<0>(o.rep_);
      break;
    case 1: {
      auto& x = std::get<1>(rep_);
      const auto& y = std::get<1>(o.rep_);
      if (x.d != y.d) throw FieldError("radicand mismatch");
      x.a -= y.a;
      x.b -= y.b;
      break;
    }
    default:
      std::get<2>(rep_) -= std::get<2>(o.rep_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (rep_.index() != o.rep_.index()) variant_mismatch();
  switch (rep_.index()) {
    case 0:
      std::get<0>(rep_) *= std::get<0>(o.rep_);
      break;
    case 1: {
      auto& x = std::get<1>(rep_);
      const auto& y = std::get<1>(o.rep_);
      if (x.d != y.d) throw FieldError("radicand mismatch");
      if (sgn(x.b) == 0 && sgn(y.b) == 0) {
        x.a *= y.a;
        break;
      }
      // (a + b r)(c + e r) = (ac + d b e) + (ae + bc) r
      Rational a = x.a * y.a + Rational(x.d) * x.b * y.b;
      Rational b = x.a * y.b + x.b * y.a;
      x.a = std::move(a);
      x.b = std::move(b);
      break;
    }
    default:
      std::get<2>(rep_) *= std::get<2>(o.rep_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (rep_.index() != o.rep_.index()) variant_mismatch();
  if (o.is_zero()) throw FieldError("division by zero");
  switch (rep_.index()) {
    case 0:
      std::get<0>(rep_) /= std::get<0>(o.rep_);
      break;
    case 1: {
      const auto& y = std::get<1>(o.rep_);
      if (std::get<1>(rep_).d != y.d) throw FieldError("radicand mismatch");
      if (sgn(y.b) == 0) {
        auto& x = std::get<1>(rep_);
        x.a /= y.a;
        x.b /= y.a;
        break;
      }
      // 1/(a + b r) = (a - b r) / (a^2 - d b^2)
      const Rational norm = y.a * y.a - Rational(y.d) * y.b * y.b;
      Scalar inv(Rep(Quadratic{y.a / norm, -y.b / norm, y.d}));
      *this *= inv;
      break;
    }
    default:
      std::get<2>(rep_) /= std::get<2>(o.rep_);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  const auto ka = a.kind();
  const auto kb = b.kind();
  if (ka == FieldKind::float64 || kb == FieldKind::float64) {
    return ka == kb && a.float_value() == b.float_value();
  }
  if (ka == FieldKind::quadratic && kb == FieldKind::quadratic && a.radicand() != b.radicand()) {
    return sgn(a.surd_part()) == 0 && sgn(b.surd_part()) == 0 &&
           a.rational_part() == b.rational_part();
  }
  return a.rational_part() == b.rational_part() && a.surd_part() == b.surd_part();
}

std::string Scalar::to_string() const {
  switch (rep_.index()) {
    case 0:
      return std::get<0>(rep_).get_str();
    case 1: {
      const auto& x = std::get<1>(rep_);
      const std::string root = "sqrt(" + std::to_string(x.d) + ")";
      const int sb = sgn(x.b);
      if (sb == 0) return x.a.get_str();
      const Rational mag = sb < 0 ? Rational(-x.b) : x.b;
      const std::string surd = (mag == 1 ? std::string() : mag.get_str() + "*") + root;
      if (sgn(x.a) == 0) return sb < 0 ? "-" + surd : surd;
      return x.a.get_str() + (sb < 0 ? " - " : " + ") + surd;
    }
    default:
      return double_to_string(std::get<2>(rep_));
  }
}

int compare(const Scalar& x, const Scalar& y) { return (x - y).sign(); }

const Scalar& max_abs_of(const Scalar& x, const Scalar& y) {
  return compare(x.abs(), y.abs()) >= 0 ? x : y;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Field Field::quadratic(std::int64_t d) {
  if (!is_square_free(d)) {
    throw FieldError("radicand must be a square-free integer >= 2, got " + std::to_string(d));
  }
  return Field(FieldKind::quadratic, d);
}

Scalar Field::from_rational(const Rational& q) const {
  switch (kind_) {
    case FieldKind::rational:
      return Scalar::rational(q);
    case FieldKind::quadratic:
      return Scalar::quadratic(q, Rational(0), radicand_);
    default:
      return Scalar::real(nearest_double(q));
  }
}

Scalar Field::from_surd(const Rational& a, const Rational& b) const {
  if (kind_ != FieldKind::quadratic) throw FieldError("surd literal outside a quadratic field");
  return Scalar::quadratic(a, b, radicand_);
}

Scalar Field::from_double(double v) const {
  if (kind_ != FieldKind::float64) throw FieldError("float literal in an exact field");
  return Scalar::real(v);
}

Scalar Field::embed(const Scalar& s) const {
  if (contains(s)) return s;
  if (s.is_rational()) return from_rational(s.rational_part());
  if (kind_ == FieldKind::float64) return Scalar::real(s.to_double());
  throw FieldError("cannot embed " + s.to_string() + " into field " + name());
}

bool Field::contains(const Scalar& s) const {
  if (s.kind() != kind_) return false;
  return kind_ != FieldKind::quadratic || s.radicand() == radicand_;
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::rational:
      return "rational";
    case FieldKind::quadratic:
      return "Q(sqrt(" + std::to_string(radicand_) + "))";
    default:
      return "float64";
  }
}

bool negligible(const Scalar& x, double scale, double tol) {
  if (x.is_exact()) return x.is_zero();
  return std::fabs(x.float_value()) <= tol * scale;
}

}  // namespace npk
