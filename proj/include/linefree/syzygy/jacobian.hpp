#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "linefree/algebra/matrix.hpp"
#include "linefree/algebra/modular.hpp"
#include "linefree/algebra/monomial.hpp"
#include "linefree/algebra/number.hpp"
#include "linefree/syzygy/polynomial.hpp"

namespace linefree {

/// The generators f_x, f_y, f_z of the Jacobian ideal of a form f of degree d.
struct JacobianTriple {
  int d = 0;
  std::array<HomogeneousPoly, 3> partials;

  /// Smallest field containing every coefficient.
  FieldSpec field() const {
    for (const auto& p : partials)
      for (const auto& [m, c] : p.terms())
        if (!c.is_rational()) return c.field();
    return FieldSpec::rationals();
  }
};

inline JacobianTriple jacobian(const HomogeneousPoly& f) {
  return JacobianTriple{f.degree(), {f.derivative(0), f.derivative(1), f.derivative(2)}};
}

/// x f_x + y f_y + z f_z == d f.
inline bool euler_identity_holds(const HomogeneousPoly& f, const JacobianTriple& j) {
  HomogeneousPoly lhs(f.degree());
  for (int v = 0; v < 3; ++v) lhs += j.partials[static_cast<std::size_t>(v)].times(Monomial::variable(v));
  return lhs == f.scaled(Number(f.degree()));
}

/// Matrix of (a, b, c) |-> a f_x + b f_y + c f_z from S_k^3 to S_{k+d-1}.
/// Column c*dim(S_k) + i holds the image of the i-th monomial of S_k placed in
/// component c; rows follow the graded-lex basis of S_{k+d-1}.
inline Matrix<Number> jacobian_map(const JacobianTriple& j, int k) {
  const std::size_t n = graded_dimension(k);
  Matrix<Number> m(graded_dimension(k + j.d - 1), 3 * n);
  MonomialBasis basis = monomial_basis(k);
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [mono, coeff] : j.partials[c].terms())
        m(monomial_index(mono.times(basis[i])), c * n + i) = coeff;
  return m;
}

/// The same matrix reduced mod p, assembled directly from reduced partials.
inline ModMatrix jacobian_map_mod(const JacobianTriple& j, int k, const Reduction& red) {
  const std::size_t n = graded_dimension(k);
  ModMatrix m(graded_dimension(k + j.d - 1), 3 * n, 0);
  MonomialBasis basis = monomial_basis(k);
  for (std::size_t c = 0; c < 3; ++c) {
    std::vector<std::pair<Monomial, std::uint64_t>> reduced;
    for (const auto& [mono, coeff] : j.partials[c].terms()) reduced.emplace_back(mono, red(coeff));
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [mono, coeff] : reduced) m(monomial_index(mono.times(basis[i])), c * n + i) = coeff;
  }
  return m;
}

}  // namespace linefree
