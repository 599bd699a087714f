#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linefree/algebra/number.hpp"
#include "linefree/arrangement/arrangement.hpp"
#include "linefree/arrangement/tvector.hpp"
#include "linefree/classifier/quadratic.hpp"

namespace linefree {

/// The roots column as printed: integers, or just "real" / "complex".
struct PrintedRoots {
  enum class Kind { Integers, Real, Complex };
  Kind kind = Kind::Integers;
  std::vector<long> values;

  static PrintedRoots of(const QuadraticRoots& r) {
    if (std::holds_alternative<RealIrrational>(r)) return {Kind::Real, {}};
    if (std::holds_alternative<ComplexRoots>(r)) return {Kind::Complex, {}};
    if (auto* t = std::get_if<TwoIntegers>(&r)) return {Kind::Integers, {t->r1, t->r2}};
    return {Kind::Integers, {std::get<DoubleInteger>(r).r0}};
  }

  std::string to_string() const {
    if (kind == Kind::Real) return "real";
    if (kind == Kind::Complex) return "complex";
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + std::to_string(values[i]);
    return s;
  }

  friend bool operator==(const PrintedRoots&, const PrintedRoots&) = default;
};

/// Values transcribed from a published table, kept verbatim.
struct Expected {
  std::optional<long> mu;
  std::optional<Sign> disc;
  std::optional<PrintedRoots> roots;

  bool empty() const { return !mu && !disc && !roots; }
  friend bool operator==(const Expected&, const Expected&) = default;
};

struct CatalogueEntry {
  std::string name;
  long d = 0;
  TVector t;
  FieldSpec field;
  std::optional<Arrangement> realization;
  Expected expected;

  CombinatorialProfile profile() const { return linefree::profile(t, d); }
  friend bool operator==(const CatalogueEntry&, const CatalogueEntry&) = default;
};

struct CatalogueFile {
  std::vector<CatalogueEntry> entries;

  const CatalogueEntry* find(std::string_view name) const {
    auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogueEntry& e) { return e.name == name; });
    return it == entries.end() ? nullptr : &*it;
  }
  std::size_t size() const { return entries.size(); }

  friend bool operator==(const CatalogueFile&, const CatalogueFile&) = default;
};

}  // namespace linefree
