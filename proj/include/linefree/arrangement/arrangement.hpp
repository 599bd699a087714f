#pragma once

// Projective line arrangements over Q or Q(sqrt(n)) and their intersection
// combinatorics.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linefree/algebra/number.hpp"
#include "linefree/arrangement/tvector.hpp"
#include "linefree/error.hpp"
#include "linefree/syzygy/polynomial.hpp"

namespace linefree {

namespace detail {

/// Scales a nonzero triple so that its first nonzero entry is 1.
inline std::array<Number, 3> normalize_triple(std::array<Number, 3> v) {
  std::size_t lead = 0;
  while (lead < 3 && v[lead].is_zero()) ++lead;
  if (lead == 3) throw InvalidLine("all three coordinates are zero");
  if (!v[lead].is_one()) {
    Number inv = v[lead].inverse();
    for (std::size_t i = lead; i < 3; ++i) v[i] *= inv;
  }
  return v;
}

inline std::array<Number, 3> cross(const std::array<Number, 3>& u, const std::array<Number, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

struct TripleLess {
  bool operator()(const std::array<Number, 3>& a, const std::array<Number, 3>& b) const {
    for (std::size_t i = 0; i < 3; ++i) {
      auto c = lex_compare(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

}  // namespace detail

/// Point [x:y:z] of the projective plane, first nonzero coordinate equal to 1.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::array<Number, 3> coords) : c_(detail::normalize_triple(std::move(coords))) {}
  const std::array<Number, 3>& coordinates() const { return c_; }
  const Number& operator[](std::size_t i) const { return c_[i]; }
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  std::string to_string() const {
    return "[" + c_[0].to_string() + ":" + c_[1].to_string() + ":" + c_[2].to_string() + "]";
  }

 private:
  std::array<Number, 3> c_;
};

/// The line a*x + b*y + c*z = 0, stored with its first nonzero coefficient 1.
class ProjectiveLine {
 public:
  explicit ProjectiveLine(std::array<Number, 3> coeffs) : c_(detail::normalize_triple(std::move(coeffs))) {}
  ProjectiveLine(Number a, Number b, Number c)
      : ProjectiveLine(std::array<Number, 3>{std::move(a), std::move(b), std::move(c)}) {}

  const std::array<Number, 3>& coefficients() const { return c_; }
  const Number& operator[](std::size_t i) const { return c_[i]; }

  Number evaluate(const ProjectivePoint& p) const { return c_[0] * p[0] + c_[1] * p[1] + c_[2] * p[2]; }
  bool contains(const ProjectivePoint& p) const { return evaluate(p).is_zero(); }

  HomogeneousPoly linear_form() const { return HomogeneousPoly::linear(c_[0], c_[1], c_[2]); }

  friend bool operator==(const ProjectiveLine&, const ProjectiveLine&) = default;
  std::string to_string() const {
    return "(" + c_[0].to_string() + ", " + c_[1].to_string() + ", " + c_[2].to_string() + ")";
  }

 private:
  std::array<Number, 3> c_;
};

inline ProjectivePoint intersect(const ProjectiveLine& l1, const ProjectiveLine& l2) {
  if (l1 == l2) throw IdenticalLines();
  return ProjectivePoint(detail::cross(l1.coefficients(), l2.coefficients()));
}

/// A point where at least two lines meet, with the indices of all lines
/// through it (sorted). Its multiplicity is the number of those lines.
struct IntersectionPoint {
  ProjectivePoint point;
  std::vector<std::size_t> incident;
  std::size_t multiplicity() const { return incident.size(); }
};

/// Finite list of pairwise distinct lines over a common field.
class Arrangement {
 public:
  Arrangement(FieldSpec field, std::vector<ProjectiveLine> lines, std::optional<std::string> label = std::nullopt)
      : field_(field), lines_(std::move(lines)), label_(std::move(label)) {
    if (lines_.empty()) throw InvalidLine("an arrangement needs at least one line");
    for (const auto& l : lines_)
      for (const Number& c : l.coefficients())
        if (!c.is_rational() && (field_.is_rational() || c.radicand() != field_.radicand())) {
          throw UnsupportedField("coefficient " + c.to_string() + " is not in " + field_.to_string());
        }
    std::map<std::array<Number, 3>, std::size_t, detail::TripleLess> seen;
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      auto [it, inserted] = seen.emplace(lines_[i].coefficients(), i);
      if (!inserted) throw DuplicateLine(it->second, i);
    }
  }

  FieldSpec field() const { return field_; }
  const std::vector<ProjectiveLine>& lines() const { return lines_; }
  std::size_t size() const { return lines_.size(); }
  const std::optional<std::string>& label() const { return label_; }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  FieldSpec field_;
  std::vector<ProjectiveLine> lines_;
  std::optional<std::string> label_;
};

/// All points of Sing(L). Each unordered pair of lines is accounted for by
/// exactly one returned point; points are ordered by their smallest pair.
inline std::vector<IntersectionPoint> singular_points(const Arrangement& arr) {
  const auto& lines = arr.lines();
  std::map<std::array<Number, 3>, std::size_t, detail::TripleLess> index;
  std::vector<IntersectionPoint> points;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      ProjectivePoint p = intersect(lines[i], lines[j]);
      auto [it, inserted] = index.emplace(p.coordinates(), points.size());
      if (inserted) points.push_back(IntersectionPoint{p, {}});
      auto& inc = points[it->second].incident;
      for (std::size_t k : {i, j})
        if (std::find(inc.begin(), inc.end(), k) == inc.end()) inc.push_back(k);
    }
  }
  for (auto& p : points) std::sort(p.incident.begin(), p.incident.end());
  return points;
}

inline TVector t_vector(const Arrangement& arr) {
  TVector t;
  for (const auto& p : singular_points(arr)) t.add(static_cast<int>(p.multiplicity()));
  return t;
}

inline CombinatorialProfile profile(const Arrangement& arr) {
  return profile(t_vector(arr), static_cast<long>(arr.size()));
}

/// Product of the normalized linear forms; degree d.
inline HomogeneousPoly defining_polynomial(const Arrangement& arr) {
  HomogeneousPoly f = HomogeneousPoly::constant(1);
  for (const auto& l : arr.lines()) f = f * l.linear_form();
  return f;
}

/// Arrangement with every coefficient vector multiplied on the right by the
/// invertible matrix `g`: a projective change of coordinates.
inline Arrangement transform(const Arrangement& arr, const std::array<std::array<Number, 3>, 3>& g) {
  std::vector<ProjectiveLine> out;
  out.reserve(arr.size());
  for (const auto& l : arr.lines()) {
    std::array<Number, 3> c;
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t i = 0; i < 3; ++i) c[j] += l[i] * g[i][j];
    out.emplace_back(c);
  }
  return Arrangement(arr.field(), std::move(out), arr.label());
}

}  // namespace linefree
