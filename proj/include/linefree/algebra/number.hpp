#pragma once

// Exact elements of Q and of real quadratic fields Q(sqrt(n)).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "linefree/error.hpp"

namespace linefree {

/// Coefficient field of an arrangement: Q (radicand 1) or Q(sqrt(n)) for a
/// square-free n >= 2.
class FieldSpec {
 public:
  constexpr FieldSpec() = default;

  static constexpr FieldSpec rationals() { return FieldSpec{}; }

  static FieldSpec quadratic(std::int64_t n) {
    if (n < 2) throw UnsupportedField("radicand must be at least 2, got " + std::to_string(n));
    for (std::int64_t q = 2; q * q <= n; ++q) {
      if (n % (q * q) == 0) {
        throw UnsupportedField("radicand must be square-free, got " + std::to_string(n));
      }
    }
    FieldSpec f;
    f.radicand_ = n;
    return f;
  }

  constexpr bool is_rational() const { return radicand_ == 1; }
  constexpr std::int64_t radicand() const { return radicand_; }

  std::string to_string() const {
    return is_rational() ? "Q" : "Q(sqrt(" + std::to_string(radicand_) + "))";
  }

  friend constexpr bool operator==(FieldSpec, FieldSpec) = default;

 private:
  std::int64_t radicand_ = 1;
};

/// a + b*sqrt(n) with rational a, b. Rationals carry n = 1 and b = 0 and
/// combine freely with elements of any quadratic field.
class Number {
 public:
  Number() = default;
  Number(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Number(int v) : a_(v) {}   // NOLINT(google-explicit-constructor)
  // Fractions built from a numerator and denominator may arrive unreduced.
  Number(mpq_class v) : a_(std::move(v)) { a_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  Number(mpq_class a, mpq_class b, std::int64_t n) : a_(std::move(a)), b_(std::move(b)), n_(n) {
    if (n_ < 1) throw UnsupportedField("radicand must be positive");
    normalize();
  }

  static Number sqrt_of(std::int64_t n) { return Number(0, 1, n); }

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& radical_part() const { return b_; }
  std::int64_t radicand() const { return n_; }
  FieldSpec field() const {
    return n_ == 1 ? FieldSpec::rationals() : FieldSpec::quadratic(n_);
  }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  Number conjugate() const { return Number(a_, -b_, n_); }
  /// Field norm a^2 - n b^2 (the square for rationals).
  mpq_class norm() const { return a_ * a_ - mpq_class(n_) * b_ * b_; }

  Number inverse() const {
    if (is_zero()) throw DivisionByZero();
    mpq_class nm = norm();
    return Number(a_ / nm, -b_ / nm, n_);
  }

  Number operator-() const { return Number(-a_, -b_, n_); }

  Number& operator+=(const Number& o) {
    n_ = common(o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
  }
  Number& operator-=(const Number& o) {
    n_ = common(o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
  }
  Number& operator*=(const Number& o) {
    std::int64_t n = common(o);
    if (sgn(b_) == 0 && sgn(o.b_) == 0) {
      a_ *= o.a_;
    } else {
      mpq_class a = a_ * o.a_ + mpq_class(n) * b_ * o.b_;
      mpq_class b = a_ * o.b_ + b_ * o.a_;
      a_ = std::move(a);
      b_ = std::move(b);
    }
    n_ = n;
    normalize();
    return *this;
  }
  Number& operator/=(const Number& o) {
    if (o.is_zero()) throw DivisionByZero();
    if (sgn(b_) == 0 && sgn(o.b_) == 0) {
      n_ = common(o);
      a_ /= o.a_;
      return *this;
    }
    return *this *= o.inverse();
  }

  friend Number operator+(Number x, const Number& y) { return x += y; }
  friend Number operator-(Number x, const Number& y) { return x -= y; }
  friend Number operator*(Number x, const Number& y) { return x *= y; }
  friend Number operator/(Number x, const Number& y) { return x /= y; }

  friend bool operator==(const Number& x, const Number& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.n_ == y.n_ || sgn(x.b_) == 0);
  }

  /// Lexicographic order on (a, b). Used for keys in ordered containers;
  /// unrelated to the real ordering of the field.
  friend std::strong_ordering lex_compare(const Number& x, const Number& y) {
    int c = cmp(x.a_, y.a_);
    if (c == 0) c = cmp(x.b_, y.b_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Canonical literal: "p/q", "b*sqrt(n)" or "a+b*sqrt(n)".
  std::string to_string() const {
    if (sgn(b_) == 0) return a_.get_str();
    std::string rad = "*sqrt(" + std::to_string(n_) + ")";
    if (sgn(a_) == 0) return b_.get_str() + rad;
    if (sgn(b_) < 0) return a_.get_str() + "-" + mpq_class(-b_).get_str() + rad;
    return a_.get_str() + "+" + b_.get_str() + rad;
  }

  friend std::ostream& operator<<(std::ostream& os, const Number& x) { return os << x.to_string(); }

 private:
  std::int64_t common(const Number& o) const {
    if (n_ == o.n_) return n_;
    if (n_ == 1 && sgn(b_) == 0) return o.n_;
    if (o.n_ == 1 && sgn(o.b_) == 0) return n_;
    throw UnsupportedField("mixing Q(sqrt(" + std::to_string(n_) + ")) and Q(sqrt(" +
                           std::to_string(o.n_) + "))");
  }
  void normalize() {
    a_.canonicalize();
    b_.canonicalize();
    if (n_ == 1) {
      a_ += b_;
      b_ = 0;
    }
  }

  mpq_class a_{0};
  mpq_class b_{0};
  std::int64_t n_ = 1;
};

struct NumberLess {
  bool operator()(const Number& x, const Number& y) const { return lex_compare(x, y) < 0; }
};

}  // namespace linefree
