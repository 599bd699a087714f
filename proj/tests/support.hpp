#pragma once

#include <array>
#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "linefree/linefree.hpp"
#include "oracle/brute_force.hpp"

namespace testing_support {

using namespace linefree;

inline Arrangement from_integers(const std::vector<std::array<long, 3>>& normals) {
  std::vector<ProjectiveLine> lines;
  for (const auto& n : normals) lines.emplace_back(Number(n[0]), Number(n[1]), Number(n[2]));
  return Arrangement(FieldSpec::rationals(), std::move(lines));
}

/// Rational arrangement as oracle input.
inline std::vector<oracle::Line> oracle_lines(const Arrangement& arr) {
  std::vector<oracle::Line> out;
  for (const auto& l : arr.lines()) out.push_back({l[0].rational_part(), l[1].rational_part(), l[2].rational_part()});
  return out;
}

inline const Arrangement& fixture(const std::string& name) { return *embedded_realizations().find(name)->realization; }

/// Random distinct lines with small integer coefficients.
inline Arrangement random_arrangement(std::mt19937_64& rng, int d, long bound = 4) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<ProjectiveLine> lines;
  std::set<std::array<Number, 3>, linefree::detail::TripleLess> seen;
  while (static_cast<int>(lines.size()) < d) {
    std::array<long, 3> c{coeff(rng), coeff(rng), coeff(rng)};
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
    ProjectiveLine l{Number(c[0]), Number(c[1]), Number(c[2])};
    if (seen.insert(l.coefficients()).second) lines.push_back(l);
  }
  return Arrangement(FieldSpec::rationals(), std::move(lines));
}

using Matrix3 = std::array<std::array<Number, 3>, 3>;

inline Number det3(const Matrix3& g) {
  return g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
         g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
}

/// Random invertible rational 3x3 matrix.
inline Matrix3 random_invertible(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  for (;;) {
    Matrix3 g;
    for (auto& row : g)
      for (auto& x : row) x = Number(mpq_class(num(rng), den(rng)));
    if (!det3(g).is_zero()) return g;
  }
}

}  // namespace testing_support
