#pragma once

// Linear algebra over F_p and lifting of kernel vectors back to Q / Q(sqrt(n)).
//
// Results computed here are only ever used as bounds: for a matrix M with
// p-integral entries, rank over F_p <= rank over the field. Anything that
// must be exact is either certified from those bounds or lifted and then
// checked by an exact multiplication.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "linefree/algebra/elimination.hpp"
#include "linefree/algebra/matrix.hpp"
#include "linefree/algebra/number.hpp"
#include "linefree/algebra/prime_field.hpp"
#include "linefree/error.hpp"

namespace linefree {

using ModMatrix = Matrix<std::uint64_t>;

/// Entrywise image of a rational matrix in F_p.
inline ModMatrix modular_projection(const Matrix<Number>& m, const PrimeField& field) {
  return m.map([&](const Number& x) {
    if (!x.is_rational()) throw UnsupportedField("modular_projection(field) expects a rational matrix");
    return field.reduce(x.rational_part());
  });
}

/// Entrywise image under a reduction map (handles Q(sqrt(n)) entries).
inline ModMatrix modular_projection(const Matrix<Number>& m, const Reduction& red) {
  return m.map([&](const Number& x) { return red(x); });
}

struct ModEchelon {
  std::vector<std::size_t> pivot_columns;
  /// Original index of the row that supplied each pivot.
  std::vector<std::size_t> pivot_rows;
  std::size_t rank() const { return pivot_columns.size(); }
};

/// In-place elimination mod p. With `reduce_above` the result is the reduced
/// row echelon form (pivots equal to 1, zeros above and below).
inline ModEchelon rref_mod(const PrimeField& f, ModMatrix& a, bool reduce_above = true) {
  ModEchelon e;
  std::vector<std::size_t> origin(a.rows());
  for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = i;
  const std::uint64_t p = f.modulus();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(piv, r);
    std::swap(origin[piv], origin[r]);
    auto prow = a.row(r);
    std::uint64_t inv = f.inv(prow[c]);
    for (std::size_t j = c; j < a.cols(); ++j) prow[j] = f.mul(prow[j], inv);
    for (std::size_t i = reduce_above ? 0 : r + 1; i < a.rows(); ++i) {
      if (i == r) continue;
      auto row = a.row(i);
      std::uint64_t factor = row[c];
      if (factor == 0) continue;
      std::uint64_t nf = p - factor;
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (prow[j] == 0) continue;
        row[j] = f.add(row[j], f.mul(nf, prow[j]));
      }
    }
    e.pivot_columns.push_back(c);
    e.pivot_rows.push_back(origin[r]);
    ++r;
  }
  return e;
}

inline std::size_t rank_mod(const PrimeField& f, ModMatrix a) { return rref_mod(f, a, false).rank(); }

/// Canonical kernel vector for a non-pivot column of a reduced matrix.
inline std::vector<std::uint64_t> kernel_vector_mod(const PrimeField& f, const ModMatrix& rref,
                                                    const ModEchelon& e, std::size_t free_column) {
  std::vector<std::uint64_t> v(rref.cols(), 0);
  v[free_column] = 1;
  for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivot_columns[r]] = f.neg(rref(r, free_column));
  return v;
}

/// Row space over F_p grown one vector at a time.
class ModSpan {
 public:
  ModSpan(PrimeField field, std::size_t length) : field_(field), length_(length) {}

  std::size_t dimension() const { return rows_.size(); }
  std::size_t length() const { return length_; }

  /// Adds v; returns true when it was independent of the current span.
  bool add(std::vector<std::uint64_t> v) {
    reduce(v);
    std::size_t lead = 0;
    while (lead < length_ && v[lead] == 0) ++lead;
    if (lead == length_) return false;
    std::uint64_t inv = field_.inv(v[lead]);
    for (std::size_t j = lead; j < length_; ++j) v[j] = field_.mul(v[j], inv);
    auto pos = std::lower_bound(leads_.begin(), leads_.end(), lead);
    auto idx = pos - leads_.begin();
    leads_.insert(pos, lead);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
  }

  bool contains(std::vector<std::uint64_t> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
  }

 private:
  void reduce(std::vector<std::uint64_t>& v) const {
    const std::uint64_t p = field_.modulus();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::uint64_t c = v[leads_[r]];
      if (c == 0) continue;
      std::uint64_t nc = p - c;
      const auto& row = rows_[r];
      for (std::size_t j = leads_[r]; j < length_; ++j) {
        if (row[j] != 0) v[j] = field_.add(v[j], field_.mul(nc, row[j]));
      }
    }
  }

  PrimeField field_;
  std::size_t length_;
  std::vector<std::size_t> leads_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

/// Smallest-height fraction a/b with a = b u (mod m) and |a|, b <= sqrt(m/2).
inline std::optional<mpq_class> rational_reconstruct(const mpz_class& u, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = u % m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), t1.get_mpz_t(), m.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpq_class out(r1, t1);
  out.canonicalize();
  return out;
}

namespace detail {

/// Running Chinese remainder accumulation of a vector of residues.
class CrtAccumulator {
 public:
  explicit CrtAccumulator(std::size_t size) : values_(size, mpz_class(0)) {}

  void add(std::span<const std::uint64_t> residues, std::uint64_t p) {
    mpz_class pz;
    mpz_set_ui(pz.get_mpz_t(), p);
    if (modulus_ == 1) {
      for (std::size_t i = 0; i < values_.size(); ++i) mpz_set_ui(values_[i].get_mpz_t(), residues[i]);
      modulus_ = pz;
      return;
    }
    // x = v + M * ((r - v) * M^{-1} mod p)
    PrimeField f(p);
    std::uint64_t minv = f.inv(f.reduce(modulus_));
    for (std::size_t i = 0; i < values_.size(); ++i) {
      std::uint64_t vi = f.reduce(values_[i]);
      std::uint64_t t = f.mul(f.sub(residues[i], vi), minv);
      mpz_class tz;
      mpz_set_ui(tz.get_mpz_t(), t);
      values_[i] += modulus_ * tz;
    }
    modulus_ *= pz;
  }

  const mpz_class& modulus() const { return modulus_; }
  const std::vector<mpz_class>& values() const { return values_; }

 private:
  std::vector<mpz_class> values_;
  mpz_class modulus_ = 1;
};

}  // namespace detail

/// Exact kernel vectors of M selected by non-pivot columns, recovered from
/// images mod many primes and verified by exact multiplication.
///
/// `pivot_columns` and `pivot_rows` describe the echelon structure found
/// modulo one prime; `free_columns` name the canonical kernel vectors to lift
/// (value 1 at that column, 0 at every other non-pivot column). Primes whose
/// echelon structure differs are skipped. Throws when no verified lift is
/// found within `max_primes` primes.
inline std::vector<std::vector<Number>> lift_kernel_vectors(const Matrix<Number>& m, FieldSpec spec,
                                                            std::span<const std::size_t> pivot_columns,
                                                            std::span<const std::size_t> pivot_rows,
                                                            std::span<const std::size_t> free_columns,
                                                            PrimeSequence& primes,
                                                            std::size_t max_primes = 4000) {
  const std::size_t r = pivot_columns.size();
  const std::size_t nfree = free_columns.size();
  if (nfree == 0) return {};
  // Square system on the independent rows: [A_P | A_J].
  Matrix<Number> sub(r, r + nfree);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) sub(i, j) = m(pivot_rows[i], pivot_columns[j]);
    for (std::size_t j = 0; j < nfree; ++j) sub(i, r + j) = m(pivot_rows[i], free_columns[j]);
  }
  const bool quadratic = !spec.is_rational();
  // Unknowns: for each free column, r pivot entries (two coordinates each over Q(sqrt n)).
  const std::size_t width = r * nfree * (quadratic ? 2 : 1);
  detail::CrtAccumulator crt(width);

  auto solve_mod = [&](const Reduction& red) -> std::optional<std::vector<std::uint64_t>> {
    ModMatrix a;
    try {
      a = modular_projection(sub, red);
    } catch (const BadPrime&) {
      return std::nullopt;
    }
    const PrimeField& f = red.field();
    ModEchelon e = rref_mod(f, a);
    if (e.rank() != r) return std::nullopt;
    for (std::size_t i = 0; i < r; ++i)
      if (e.pivot_columns[i] != i) return std::nullopt;
    std::vector<std::uint64_t> out(r * nfree);
    for (std::size_t j = 0; j < nfree; ++j)
      for (std::size_t i = 0; i < r; ++i) out[j * r + i] = f.neg(a(i, r + j));
    return out;
  };

  std::size_t used = 0;
  std::size_t next_attempt = 1;
  std::vector<mpq_class> previous;
  while (used < max_primes) {
    PrimeField f = primes.next();
    std::vector<std::uint64_t> residues;
    if (!quadratic) {
      auto img = solve_mod(Reduction(f, spec));
      if (!img) continue;
      residues = std::move(*img);
    } else {
      Reduction plus(f, spec, false);
      Reduction minus(f, spec, true);
      auto ip = solve_mod(plus);
      auto im = solve_mod(minus);
      if (!ip || !im) continue;
      // a = (i+ + i-)/2, b = (i+ - i-)/(2s)
      std::uint64_t inv2 = f.inv(2);
      std::uint64_t inv2s = f.inv(f.mul(2, plus.root()));
      residues.resize(width);
      for (std::size_t k = 0; k < ip->size(); ++k) {
        residues[2 * k] = f.mul(f.add((*ip)[k], (*im)[k]), inv2);
        residues[2 * k + 1] = f.mul(f.sub((*ip)[k], (*im)[k]), inv2s);
      }
    }
    crt.add(residues, f.modulus());
    ++used;
    if (used < next_attempt) continue;
    next_attempt = used + std::max<std::size_t>(1, used / 4);

    std::vector<mpq_class> coords;
    coords.reserve(width);
    bool ok = true;
    for (const mpz_class& v : crt.values()) {
      auto q = rational_reconstruct(v, crt.modulus());
      if (!q) {
        ok = false;
        break;
      }
      coords.push_back(std::move(*q));
    }
    if (!ok) continue;

    std::vector<std::vector<Number>> vectors;
    for (std::size_t j = 0; j < nfree && ok; ++j) {
      std::vector<Number> v(m.cols());
      v[free_columns[j]] = 1;
      for (std::size_t i = 0; i < r; ++i) {
        std::size_t k = j * r + i;
        v[pivot_columns[i]] = quadratic ? Number(coords[2 * k], coords[2 * k + 1], spec.radicand())
                                        : Number(coords[k]);
      }
      ok = annihilates(m, v);
      vectors.push_back(std::move(v));
    }
    if (ok) return vectors;
    // A stable reconstruction that still fails the exact check means the
    // echelon structure itself came from an unlucky prime.
    if (coords == previous) throw LiftFailure("lifted kernel vectors are stable but not in the kernel");
    previous = std::move(coords);
  }
  throw LiftFailure("kernel lifting did not converge within " + std::to_string(max_primes) + " primes");
}

}  // namespace linefree
