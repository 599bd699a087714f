#pragma once

// Monomials of S = K[x,y,z] and bases of its graded pieces S_k.

#include <array>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace linefree {

/// Dimension of S_k, i.e. C(k+2, 2); zero for negative k.
constexpr std::size_t graded_dimension(int k) {
  return k < 0 ? 0 : static_cast<std::size_t>(k + 2) * static_cast<std::size_t>(k + 1) / 2;
}

struct Monomial {
  std::array<int, 3> exponents{};

  constexpr int degree() const { return exponents[0] + exponents[1] + exponents[2]; }

  constexpr Monomial times(const Monomial& o) const {
    return {{exponents[0] + o.exponents[0], exponents[1] + o.exponents[1], exponents[2] + o.exponents[2]}};
  }
  static constexpr Monomial variable(int v) {
    Monomial m;
    m.exponents[static_cast<std::size_t>(v)] = 1;
    return m;
  }

  /// Graded lexicographic with x > y > z.
  friend constexpr std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.exponents <=> b.exponents;
  }
  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const {
    static constexpr char names[] = {'x', 'y', 'z'};
    std::string s;
    for (std::size_t v = 0; v < 3; ++v) {
      if (exponents[v] == 0) continue;
      if (!s.empty()) s += '*';
      s += names[v];
      if (exponents[v] > 1) s += '^' + std::to_string(exponents[v]);
    }
    return s.empty() ? "1" : s;
  }
};

/// Position of a degree-k monomial in the graded-lex ordered basis of S_k:
/// x^k first, z^k last.
constexpr std::size_t monomial_index(const Monomial& m) {
  int k = m.degree();
  int i = m.exponents[0];
  return static_cast<std::size_t>((k - i) * (k - i + 1) / 2 + m.exponents[2]);
}

/// Monomials of S_k in decreasing graded-lex order (x > y > z).
struct MonomialBasis {
  int degree = 0;
  std::vector<Monomial> monomials;

  std::size_t size() const { return monomials.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials[i]; }
};

inline MonomialBasis monomial_basis(int k) {
  if (k < 0) throw std::invalid_argument("negative degree " + std::to_string(k));
  MonomialBasis b;
  b.degree = k;
  b.monomials.reserve(graded_dimension(k));
  for (int i = k; i >= 0; --i)
    for (int j = k - i; j >= 0; --j) b.monomials.push_back(Monomial{{i, j, k - i - j}});
  return b;
}

}  // namespace linefree
