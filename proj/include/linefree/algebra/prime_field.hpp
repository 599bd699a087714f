#pragma once

// Arithmetic in F_p for word-size primes p < 2^63.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linefree/algebra/number.hpp"
#include "linefree/error.hpp"

namespace linefree {

namespace detail {

__extension__ using u128 = unsigned __int128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "mpz_fdiv_ui needs a 64-bit unsigned long");

inline std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t m) {
  return mpz_fdiv_ui(z.get_mpz_t(), m);
}

}  // namespace detail

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Largest prime strictly below `bound`.
inline std::uint64_t previous_prime(std::uint64_t bound) {
  for (std::uint64_t n = bound - 1; n >= 2; --n) {
    if (is_prime(n)) return n;
  }
  throw Error("no prime below " + std::to_string(bound));
}

class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (1ULL << 63) || !is_prime(p)) {
      throw BadPrime(std::to_string(p) + " is not a prime below 2^63");
    }
  }

  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return detail::mulmod(a, b, p_); }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const { return detail::powmod(a, e, p_); }
  std::uint64_t inv(std::uint64_t a) const {
    if (a % p_ == 0) throw DivisionByZero();
    return pow(a, p_ - 2);
  }
  std::uint64_t from_int(long v) const { return reduce(mpz_class(v)); }

  std::uint64_t reduce(const mpz_class& z) const { return detail::mpz_mod_u64(z, p_); }

  /// Image of a rational; throws BadPrime when p divides the denominator.
  std::uint64_t reduce(const mpq_class& q) const {
    std::uint64_t den = reduce(q.get_den());
    if (den == 0) throw BadPrime("denominator of " + q.get_str() + " vanishes mod " + std::to_string(p_));
    return mul(reduce(q.get_num()), inv(den));
  }

  /// A square root of n mod p (Tonelli-Shanks), or nullopt for non-residues.
  std::optional<std::uint64_t> sqrt(std::uint64_t n) const {
    n %= p_;
    if (n == 0) return 0;
    if (p_ == 2) return n;
    if (pow(n, (p_ - 1) / 2) != 1) return std::nullopt;
    std::uint64_t q = p_ - 1;
    int s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    std::uint64_t z = 2;
    while (pow(z, (p_ - 1) / 2) != p_ - 1) ++z;
    std::uint64_t c = pow(z, q);
    std::uint64_t r = pow(n, (q + 1) / 2);
    std::uint64_t t = pow(n, q);
    int m = s;
    while (t != 1) {
      int i = 0;
      std::uint64_t tt = t;
      while (tt != 1) {
        tt = mul(tt, tt);
        ++i;
      }
      std::uint64_t b = c;
      for (int j = 0; j < m - i - 1; ++j) b = mul(b, b);
      r = mul(r, b);
      c = mul(b, b);
      t = mul(t, c);
      m = i;
    }
    return std::min(r, p_ - r);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// Ring map from the p-integral elements of Q(sqrt(n)) onto F_p, sending
/// sqrt(n) to a chosen square root of n mod p.
class Reduction {
 public:
  Reduction(PrimeField field, FieldSpec spec, bool negate_root = false) : field_(field), spec_(spec) {
    if (!spec.is_rational()) {
      std::uint64_t p = field.modulus();
      std::uint64_t n = static_cast<std::uint64_t>(spec.radicand());
      if (p == 2 || n % p == 0) {
        throw BadPrime(std::to_string(p) + " ramifies in " + spec.to_string());
      }
      auto root = field.sqrt(n);
      if (!root) {
        throw BadPrime(std::to_string(spec.radicand()) + " is not a square mod " + std::to_string(p));
      }
      root_ = negate_root ? field.neg(*root) : *root;
    }
  }

  /// True when the radicand has a square root mod p (always true over Q).
  static bool admissible(const PrimeField& field, FieldSpec spec) {
    if (spec.is_rational()) return true;
    std::uint64_t p = field.modulus();
    std::uint64_t n = static_cast<std::uint64_t>(spec.radicand());
    return p != 2 && n % p != 0 && field.sqrt(n).has_value();
  }

  const PrimeField& field() const { return field_; }
  FieldSpec spec() const { return spec_; }
  std::uint64_t root() const { return root_; }

  std::uint64_t operator()(const Number& x) const {
    std::uint64_t a = field_.reduce(x.rational_part());
    if (x.is_rational()) return a;
    if (x.radicand() != spec_.radicand()) {
      throw UnsupportedField("element of " + x.field().to_string() + " reduced in " + spec_.to_string());
    }
    return field_.add(a, field_.mul(field_.reduce(x.radical_part()), root_));
  }

 private:
  PrimeField field_;
  FieldSpec spec_;
  std::uint64_t root_ = 0;
};

/// Deterministic sequence of 62-bit primes admissible for `spec`, largest
/// first, optionally starting with a caller-chosen prime.
class PrimeSequence {
 public:
  explicit PrimeSequence(FieldSpec spec, std::optional<std::uint64_t> first = std::nullopt)
      : spec_(spec), first_(first) {}

  PrimeField next() {
    if (first_) {
      PrimeField f(*first_);
      first_.reset();
      if (!Reduction::admissible(f, spec_)) {
        throw BadPrime(std::to_string(f.modulus()) + " is not admissible for " + spec_.to_string());
      }
      used_.push_back(f.modulus());
      return f;
    }
    for (;;) {
      cursor_ = previous_prime(cursor_);
      bool seen = false;
      for (auto u : used_) seen = seen || u == cursor_;
      if (seen) continue;
      PrimeField f(cursor_);
      if (Reduction::admissible(f, spec_)) {
        used_.push_back(cursor_);
        return f;
      }
    }
  }

 private:
  FieldSpec spec_;
  std::optional<std::uint64_t> first_;
  std::uint64_t cursor_ = 1ULL << 62;
  std::vector<std::uint64_t> used_;
};

}  // namespace linefree
