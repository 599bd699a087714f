#pragma once

// Reference computations that share no code with the library: polynomials
// as maps, monomials enumerated in a different order, plain Gaussian
// elimination over mpq_class, and point grouping by 3x3 determinants.

#include <gmpxx.h>

#include <array>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Mono = std::array<int, 3>;
using Poly = std::map<Mono, mpq_class>;
using Vec = std::vector<mpq_class>;
using Mat = std::vector<Vec>;
using Line = std::array<mpq_class, 3>;

inline Poly linear(const Line& l) {
  Poly p;
  if (l[0] != 0) p[{1, 0, 0}] = l[0];
  if (l[1] != 0) p[{0, 1, 0}] = l[1];
  if (l[2] != 0) p[{0, 0, 1}] = l[2];
  return p;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) out[{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}] += ca * cb;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Poly diff(const Poly& p, int v) {
  Poly out;
  for (const auto& [m, c] : p) {
    if (m[v] == 0) continue;
    Mono n = m;
    --n[v];
    out[n] += c * m[v];
  }
  return out;
}

inline Poly product(const std::vector<Line>& lines) {
  Poly f{{{0, 0, 0}, 1}};
  for (const auto& l : lines) f = mul(f, linear(l));
  return f;
}

/// Monomials of degree k with x-exponent ascending (the reverse of the library).
inline std::vector<Mono> monomials(int k) {
  std::vector<Mono> out;
  if (k < 0) return out;
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k - i; ++j) out.push_back({i, j, k - i - j});
  return out;
}

inline std::map<Mono, std::size_t> index_of(int k) {
  std::map<Mono, std::size_t> idx;
  auto ms = monomials(k);
  for (std::size_t i = 0; i < ms.size(); ++i) idx[ms[i]] = i;
  return idx;
}

/// Rank by fraction Gaussian elimination; destroys its argument.
inline std::size_t rank(Mat m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Kernel basis from the reduced row echelon form.
inline std::vector<Vec> kernel(Mat m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    mpq_class inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<Vec> out;
  std::set<std::size_t> piv(pivots.begin(), pivots.end());
  for (std::size_t fcol = 0; fcol < cols; ++fcol) {
    if (piv.count(fcol)) continue;
    Vec v(cols, 0);
    v[fcol] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][fcol];
    out.push_back(v);
  }
  return out;
}

struct Jacobian {
  int d = 0;
  std::array<Poly, 3> partials;
};

inline Jacobian jacobian(const std::vector<Line>& lines) {
  Poly f = product(lines);
  return {static_cast<int>(lines.size()), {diff(f, 0), diff(f, 1), diff(f, 2)}};
}

/// Matrix of (a,b,c) -> a f_x + b f_y + c f_z on S_k^3 (column = component, monomial).
inline Mat syzygy_matrix(const Jacobian& j, int k) {
  auto src = monomials(k);
  auto dst = index_of(k + j.d - 1);
  Mat m(dst.size(), Vec(3 * src.size(), 0));
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < src.size(); ++i)
      for (const auto& [mono, coeff] : j.partials[c]) {
        Mono t{mono[0] + src[i][0], mono[1] + src[i][1], mono[2] + src[i][2]};
        m[dst.at(t)][c * src.size() + i] += coeff;
      }
  return m;
}

inline std::size_t syzygy_dimension(const Jacobian& j, int k) {
  if (k < 0) return 0;
  Mat m = syzygy_matrix(j, k);
  return 3 * monomials(k).size() - rank(m);
}

inline std::size_t first_nonzero_syzygy_degree(const Jacobian& j) {
  for (int k = 0;; ++k)
    if (syzygy_dimension(j, k) > 0) return static_cast<std::size_t>(k);
}

/// Multiply a syzygy vector of degree k by the variable v.
inline Vec shift(const Vec& s, int k, int v) {
  auto src = monomials(k);
  auto dst = index_of(k + 1);
  Vec out(3 * dst.size(), 0);
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < src.size(); ++i) {
      Mono t = src[i];
      ++t[v];
      out[c * dst.size() + dst.at(t)] = s[c * src.size() + i];
    }
  return out;
}

/// Minimal generator degrees up to k_max: dim Syz_k - dim(S_1 Syz_{k-1}).
inline std::multiset<int> generator_degrees(const Jacobian& j, int k_max) {
  std::multiset<int> out;
  std::vector<Vec> prev;
  for (int k = 0; k <= k_max; ++k) {
    Mat m = syzygy_matrix(j, k);
    auto ker = kernel(m, 3 * monomials(k).size());
    Mat mult;
    for (const auto& s : prev)
      for (int v = 0; v < 3; ++v) mult.push_back(shift(s, k - 1, v));
    std::size_t generated = mult.empty() ? 0 : rank(mult);
    for (std::size_t n = generated; n < ker.size(); ++n) out.insert(k);
    prev = ker;
  }
  return out;
}

inline long hilbert(const Jacobian& j, int degree) {
  long dim = static_cast<long>(monomials(degree).size());
  int k = degree - j.d + 1;
  if (k < 0) return dim;
  return dim - static_cast<long>(rank(syzygy_matrix(j, k)));
}

inline mpq_class det3(const Line& a, const Line& b, const Line& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

/// r -> number of points on exactly r lines. The point l_i cap l_j is shared
/// with l_m iff det(l_i, l_j, l_m) = 0.
inline std::map<int, long> t_vector(const std::vector<Line>& lines) {
  std::set<std::set<std::size_t>> points;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      std::set<std::size_t> through{i, j};
      for (std::size_t m = 0; m < lines.size(); ++m)
        if (m != i && m != j && det3(lines[i], lines[j], lines[m]) == 0) through.insert(m);
      points.insert(through);
    }
  std::map<int, long> t;
  for (const auto& p : points) ++t[static_cast<int>(p.size())];
  return t;
}

}  // namespace oracle
