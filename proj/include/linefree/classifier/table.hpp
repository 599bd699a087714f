#pragma once

// Recomputes mu, the discriminant sign and the roots for catalogue entries
// and compares them with the transcribed values.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linefree/catalogue/entry.hpp"
#include "linefree/classifier/quadratic.hpp"

namespace linefree {

/// Published values known to be wrong, with what recomputation gives.
struct KnownDiscrepancy {
  std::string_view name;
  std::string_view column;
  std::string_view printed;
  std::string_view recomputed;
};

// Roots (0, 2) do not solve r^2 - 6r + 8 = 0; the roots are 2 and 4.
inline constexpr std::array<KnownDiscrepancy, 1> known_discrepancies{{{"A(7,1)", "roots", "0 2", "2 4"}}};

enum class RowStatus { Match, KnownDiscrepancy, Mismatch };

inline std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Match: return "ok";
    case RowStatus::KnownDiscrepancy: return "known discrepancy";
    case RowStatus::Mismatch: return "MISMATCH";
  }
  return "?";
}

struct TableRow {
  std::string name;
  long d = 0;
  TVector t;
  long mu = 0;
  DimcaQuadratic quadratic;
  Expected expected;
  bool mu_matches = true;
  bool disc_matches = true;
  bool roots_match = true;
  /// Printed integer roots, if any, all solve the quadratic.
  std::optional<bool> printed_roots_solve;
  bool screen_passes = false;
  RowStatus status = RowStatus::Match;
  std::string note;
};

inline std::optional<KnownDiscrepancy> find_known_discrepancy(std::string_view name, std::string_view column) {
  for (const auto& k : known_discrepancies)
    if (k.name == name && k.column == column) return k;
  return std::nullopt;
}

inline TableRow reproduce_row(const CatalogueEntry& e) {
  TableRow row;
  row.name = e.name;
  row.d = e.d;
  row.t = e.t;
  row.mu = milnor_number(e.t);
  row.quadratic = quadratic(e.d, row.mu);
  row.expected = e.expected;
  row.screen_passes = screen(e.profile());

  const auto& ex = e.expected;
  row.mu_matches = !ex.mu || *ex.mu == row.mu;
  row.disc_matches = !ex.disc || *ex.disc == row.quadratic.discriminant_sign();
  PrintedRoots computed = PrintedRoots::of(row.quadratic.roots);
  row.roots_match = !ex.roots || *ex.roots == computed;
  if (ex.roots && ex.roots->kind == PrintedRoots::Kind::Integers) {
    row.printed_roots_solve = std::all_of(ex.roots->values.begin(), ex.roots->values.end(),
                                          [&](long r) { return row.quadratic.value(r) == 0; });
  }

  std::vector<std::string> problems;
  if (!row.mu_matches) problems.push_back("mu printed " + std::to_string(*ex.mu));
  if (!row.disc_matches) problems.push_back("discriminant sign printed " + to_string(*ex.disc));
  if (!row.roots_match) {
    problems.push_back("roots printed " + ex.roots->to_string() + ", recomputed " + computed.to_string());
  }
  if (problems.empty()) return row;

  for (std::size_t i = 0; i < problems.size(); ++i) row.note += (i ? "; " : "") + problems[i];
  auto known = find_known_discrepancy(e.name, "roots");
  const bool only_roots = row.mu_matches && row.disc_matches;
  row.status = known && only_roots && known->printed == ex.roots->to_string() &&
                       known->recomputed == computed.to_string()
                   ? RowStatus::KnownDiscrepancy
                   : RowStatus::Mismatch;
  return row;
}

inline std::vector<TableRow> reproduce_table(const std::vector<CatalogueEntry>& entries) {
  std::vector<TableRow> rows;
  rows.reserve(entries.size());
  for (const auto& e : entries) rows.push_back(reproduce_row(e));
  return rows;
}

}  // namespace linefree
