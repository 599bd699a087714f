#pragma once

// The quadratic r^2 - r(d-1) + (d-1)^2 - (mu+1) in the number r of the
// minimal degree of a Jacobian relation. For r <= d/2 a line arrangement is
// nearly free exactly when the mdr is a root.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "linefree/arrangement/tvector.hpp"

namespace linefree {

enum class Sign { Negative, Zero, Positive };

inline std::string to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "neg";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "pos";
  }
  return "?";
}

inline Sign sign_of(long v) { return v < 0 ? Sign::Negative : (v == 0 ? Sign::Zero : Sign::Positive); }

struct TwoIntegers {
  long r1 = 0, r2 = 0;  // r1 < r2
  friend bool operator==(const TwoIntegers&, const TwoIntegers&) = default;
};
struct DoubleInteger {
  long r0 = 0;
  friend bool operator==(const DoubleInteger&, const DoubleInteger&) = default;
};
struct RealIrrational {
  friend bool operator==(const RealIrrational&, const RealIrrational&) = default;
};
struct ComplexRoots {
  friend bool operator==(const ComplexRoots&, const ComplexRoots&) = default;
};
using QuadraticRoots = std::variant<TwoIntegers, DoubleInteger, RealIrrational, ComplexRoots>;

/// floor(sqrt(v)) for v >= 0.
inline long isqrt(long v) {
  long r = 0;
  for (long bit = 1L << 30; bit > 0; bit >>= 1) {
    long c = r + bit;
    if (c <= v / c) r = c;
  }
  return r;
}

struct DimcaQuadratic {
  long d = 0;
  long mu = 0;
  /// q(r) = r^2 + b r + c
  long b = 0;
  long c = 0;
  long discriminant = 0;
  QuadraticRoots roots;

  long value(long r) const { return r * r + b * r + c; }
  Sign discriminant_sign() const { return sign_of(discriminant); }

  std::vector<long> integer_roots() const {
    if (auto* t = std::get_if<TwoIntegers>(&roots)) return {t->r1, t->r2};
    if (auto* o = std::get_if<DoubleInteger>(&roots)) return {o->r0};
    return {};
  }
};

inline DimcaQuadratic quadratic(long d, long mu) {
  DimcaQuadratic q;
  q.d = d;
  q.mu = mu;
  q.b = -(d - 1);
  q.c = (d - 1) * (d - 1) - (mu + 1);
  // b^2 - 4c = 4(mu+1) - 3(d-1)^2
  q.discriminant = 4 * (mu + 1) - 3 * (d - 1) * (d - 1);
  if (q.discriminant < 0) {
    q.roots = ComplexRoots{};
    return q;
  }
  long s = isqrt(q.discriminant);
  if (s * s != q.discriminant) {
    q.roots = RealIrrational{};
  } else if (s == 0) {
    // discriminant = (d-1)^2 mod 4, so d - 1 is even here
    q.roots = DoubleInteger{(d - 1) / 2};
  } else {
    q.roots = TwoIntegers{(d - 1 - s) / 2, (d - 1 + s) / 2};
  }
  return q;
}

inline DimcaQuadratic quadratic(const CombinatorialProfile& p) { return quadratic(p.d, p.mu); }

/// "r1=..,r2=..", "r0=..", "real" or "complex", as in the roots column.
inline std::string roots_string(const QuadraticRoots& r) {
  if (auto* t = std::get_if<TwoIntegers>(&r)) return "r1=" + std::to_string(t->r1) + ",r2=" + std::to_string(t->r2);
  if (auto* o = std::get_if<DoubleInteger>(&r)) return "r0=" + std::to_string(o->r0);
  if (std::holds_alternative<RealIrrational>(r)) return "real";
  return "complex";
}

/// Screening on combinatorics alone: the discriminant is a nonnegative
/// perfect square and the quadratic has an integer root.
inline bool screen(const CombinatorialProfile& p) { return !quadratic(p).integer_roots().empty(); }

}  // namespace linefree
