#pragma once

// Exact rank and kernel computations over Q and Q(sqrt(n)).
//
// Rows are first scaled to clear denominators, so elimination runs in Z or
// Z[sqrt(n)]. Both are fraction-free (Bareiss): every intermediate entry is a
// minor of the scaled input and each division is exact. Pivots are chosen as
// the first nonzero entry in row order, column by column, so results are
// reproducible.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "linefree/algebra/matrix.hpp"
#include "linefree/algebra/number.hpp"

namespace linefree {

namespace detail {

struct IntegerRing {
  using value_type = mpz_class;

  static bool is_zero(const value_type& a) { return sgn(a) == 0; }
  static value_type one() { return 1; }
  /// (p*a - q*b) / d, exact.
  static void cross(value_type& out, const value_type& p, const value_type& a, const value_type& q,
                    const value_type& b, const value_type& d, value_type& tmp) {
    mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
    mpz_submul(tmp.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t());
    mpz_divexact(out.get_mpz_t(), tmp.get_mpz_t(), d.get_mpz_t());
  }
  static Number to_number(const value_type& a) { return Number(mpq_class(a)); }
};

/// Z[sqrt(n)] with n square-free; elements are pairs (a, b) for a + b sqrt(n).
struct QuadraticIntegerRing {
  struct value_type {
    mpz_class a;
    mpz_class b;
  };
  std::int64_t n;

  static bool is_zero(const value_type& x) { return sgn(x.a) == 0 && sgn(x.b) == 0; }
  static value_type one() { return {1, 0}; }

  value_type mul(const value_type& x, const value_type& y) const {
    return {x.a * y.a + mpz_class(n) * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  void cross(value_type& out, const value_type& p, const value_type& x, const value_type& q,
             const value_type& y, const value_type& d, value_type& /*tmp*/) const {
    value_type px = mul(p, x);
    value_type qy = mul(q, y);
    value_type num{px.a - qy.a, px.b - qy.b};
    // num / d = num * conj(d) / N(d); N(d) is a nonzero integer.
    value_type scaled = mul(num, value_type{d.a, -d.b});
    mpz_class norm = d.a * d.a - mpz_class(n) * d.b * d.b;
    mpz_divexact(out.a.get_mpz_t(), scaled.a.get_mpz_t(), norm.get_mpz_t());
    mpz_divexact(out.b.get_mpz_t(), scaled.b.get_mpz_t(), norm.get_mpz_t());
  }
  Number to_number(const value_type& x) const { return Number(mpq_class(x.a), mpq_class(x.b), n); }
};

inline std::int64_t common_radicand(const Matrix<Number>& m) {
  std::int64_t n = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const Number& x : m.row(i)) {
      if (x.is_rational()) continue;
      if (n != 1 && n != x.radicand()) {
        throw UnsupportedField("matrix mixes entries from different quadratic fields");
      }
      n = x.radicand();
    }
  return n;
}

inline mpz_class row_denominator_lcm(std::span<const Number> row) {
  mpz_class l = 1;
  for (const Number& x : row) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.rational_part().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.radical_part().get_den_mpz_t());
  }
  return l;
}

inline Matrix<mpz_class> integer_rows(const Matrix<Number>& m) {
  Matrix<mpz_class> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = row_denominator_lcm(m.row(i));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m(i, j).rational_part();
      out(i, j) = l / q.get_den() * q.get_num();
    }
  }
  return out;
}

inline Matrix<QuadraticIntegerRing::value_type> quadratic_integer_rows(const Matrix<Number>& m) {
  Matrix<QuadraticIntegerRing::value_type> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = row_denominator_lcm(m.row(i));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& a = m(i, j).rational_part();
      const mpq_class& b = m(i, j).radical_part();
      out(i, j) = {l / a.get_den() * a.get_num(), l / b.get_den() * b.get_num()};
    }
  }
  return out;
}

/// Forward Bareiss elimination; returns the pivot columns.
template <class Ring>
std::vector<std::size_t> bareiss_forward(const Ring& ring, Matrix<typename Ring::value_type>& a) {
  using V = typename Ring::value_type;
  std::vector<std::size_t> pivots;
  V prev = Ring::one();
  V tmp{};
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && Ring::is_zero(a(piv, c))) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(piv, r);
    const V p = a(r, c);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const V q = a(i, c);
      if (Ring::is_zero(q)) {
        // (p*a_ij - 0) / prev
        for (std::size_t j = c + 1; j < a.cols(); ++j) {
          if (!Ring::is_zero(a(i, j))) ring.cross(a(i, j), p, a(i, j), q, a(r, j), prev, tmp);
        }
      } else {
        for (std::size_t j = c + 1; j < a.cols(); ++j) ring.cross(a(i, j), p, a(i, j), q, a(r, j), prev, tmp);
      }
      a(i, c) = V{};
    }
    prev = p;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Fraction-free Gauss-Jordan. On return every pivot row holds the common
/// determinant `det` at its pivot, zeros in the other pivot columns.
template <class Ring>
struct GaussJordan {
  std::vector<std::size_t> pivots;
  typename Ring::value_type det;
};

template <class Ring>
GaussJordan<Ring> gauss_jordan(const Ring& ring, Matrix<typename Ring::value_type>& a) {
  using V = typename Ring::value_type;
  GaussJordan<Ring> out;
  V prev = Ring::one();
  V tmp{};
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && Ring::is_zero(a(piv, c))) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(piv, r);
    const V p = a(r, c);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const V q = a(i, c);
      // Rows below the pivot are zero left of c; rows above are not.
      std::size_t start = i < r ? 0 : c + 1;
      for (std::size_t j = start; j < a.cols(); ++j) {
        if (j == c) continue;
        if (Ring::is_zero(q) && Ring::is_zero(a(i, j))) continue;
        ring.cross(a(i, j), p, a(i, j), q, a(r, j), prev, tmp);
      }
      a(i, c) = V{};
    }
    prev = p;
    out.pivots.push_back(c);
    ++r;
  }
  out.det = prev;
  return out;
}

/// Canonical kernel basis from a Gauss-Jordan form: one vector per free
/// column j, with 1 at j and 0 at every other free column.
template <class Ring>
std::vector<std::vector<Number>> kernel_from_gauss_jordan(const Ring& ring,
                                                          const Matrix<typename Ring::value_type>& a,
                                                          const GaussJordan<Ring>& gj) {
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : gj.pivots) is_pivot[c] = true;
  Number det = ring.to_number(gj.det);
  std::vector<std::vector<Number>> basis;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<Number> v(a.cols());
    v[j] = 1;
    for (std::size_t r = 0; r < gj.pivots.size(); ++r) {
      if (Ring::is_zero(a(r, j))) continue;
      v[gj.pivots[r]] = -ring.to_number(a(r, j)) / det;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

/// Row-echelon summary of an exact matrix.
struct EchelonInfo {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

inline EchelonInfo echelon_info(const Matrix<Number>& m) {
  EchelonInfo info;
  if (m.empty()) return info;
  std::int64_t n = detail::common_radicand(m);
  if (n == 1) {
    auto a = detail::integer_rows(m);
    info.pivot_columns = detail::bareiss_forward(detail::IntegerRing{}, a);
  } else {
    auto a = detail::quadratic_integer_rows(m);
    info.pivot_columns = detail::bareiss_forward(detail::QuadraticIntegerRing{n}, a);
  }
  info.rank = info.pivot_columns.size();
  return info;
}

/// Rank over the field of the entries.
inline std::size_t rank(const Matrix<Number>& m) { return echelon_info(m).rank; }

/// Basis of {v : M v = 0}: one vector per non-pivot column j, equal to 1 at j
/// and 0 at the other non-pivot columns. This is the basis read off the
/// reduced row echelon form, so it does not depend on how it was computed.
inline std::vector<std::vector<Number>> kernel_basis(const Matrix<Number>& m) {
  if (m.cols() == 0) return {};
  if (m.rows() == 0) {
    std::vector<std::vector<Number>> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::vector<Number> v(m.cols());
      v[j] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  std::int64_t n = detail::common_radicand(m);
  if (n == 1) {
    detail::IntegerRing ring;
    auto a = detail::integer_rows(m);
    auto gj = detail::gauss_jordan(ring, a);
    return detail::kernel_from_gauss_jordan(ring, a, gj);
  }
  detail::QuadraticIntegerRing ring{n};
  auto a = detail::quadratic_integer_rows(m);
  auto gj = detail::gauss_jordan(ring, a);
  return detail::kernel_from_gauss_jordan(ring, a, gj);
}

/// M v, exactly.
inline std::vector<Number> multiply(const Matrix<Number>& m, std::span<const Number> v) {
  std::vector<Number> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Number acc;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (v[j].is_zero() || m(i, j).is_zero()) continue;
      acc += m(i, j) * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

inline bool annihilates(const Matrix<Number>& m, std::span<const Number> v) {
  for (const Number& x : multiply(m, v))
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace linefree
