#pragma once

// Pure combinatorics of line arrangements: t-vectors, Melchior's identity
// and the total Milnor number. Usable without coordinates.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace linefree {

/// Counts t_r of points of multiplicity exactly r (r >= 2). Zero counts are
/// not stored.
class TVector {
 public:
  TVector() = default;

  /// From the positional form (t_2, t_3, ...); trailing zeros are allowed.
  static TVector from_positional(const std::vector<long>& counts) {
    TVector t;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] < 0) throw std::invalid_argument("negative t-vector entry");
      if (counts[i] > 0) t.counts_[static_cast<int>(i) + 2] = counts[i];
    }
    return t;
  }

  void add(int multiplicity, long count = 1) {
    if (multiplicity < 2) throw std::invalid_argument("multiplicity below 2");
    if (count == 0) return;
    long& c = counts_[multiplicity];
    c += count;
    if (c < 0) throw std::invalid_argument("negative t-vector entry");
    if (c == 0) counts_.erase(multiplicity);
  }

  long operator[](int r) const {
    auto it = counts_.find(r);
    return it == counts_.end() ? 0 : it->second;
  }

  const std::map<int, long>& counts() const { return counts_; }
  bool empty() const { return counts_.empty(); }
  int max_multiplicity() const { return counts_.empty() ? 0 : counts_.rbegin()->first; }

  /// (t_2, t_3, ..., t_max) including interior zeros.
  std::vector<long> positional() const {
    std::vector<long> v;
    for (int r = 2; r <= max_multiplicity(); ++r) v.push_back((*this)[r]);
    return v;
  }

  /// Sum over points of C(mult, 2): the number of line pairs accounted for.
  long pair_count() const {
    long s = 0;
    for (const auto& [r, c] : counts_) s += c * r * (r - 1) / 2;
    return s;
  }

  /// "(t2,t3,...)" as printed in catalogue tables.
  std::string to_string() const {
    std::string s = "(";
    auto v = positional();
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  }

  friend bool operator==(const TVector&, const TVector&) = default;

 private:
  std::map<int, long> counts_;
};

/// Total Milnor number: sum over singular points of (mult - 1)^2.
inline long milnor_number(const TVector& t) {
  long mu = 0;
  for (const auto& [r, c] : t.counts()) mu += c * (r - 1) * (r - 1);
  return mu;
}

/// Melchior's characterization of simplicial real arrangements:
/// d >= 3, t_d = 0 and t_2 = 3 + sum_{r >= 4} (r - 3) t_r.
inline bool melchior_check(const TVector& t, long d) {
  if (d < 3 || t[static_cast<int>(d)] != 0) return false;
  long rhs = 3;
  for (const auto& [r, c] : t.counts())
    if (r >= 4) rhs += (r - 3) * c;
  return t[2] == rhs;
}

struct CombinatorialProfile {
  long d = 0;
  TVector t;
  long mu = 0;
  bool simplicial = false;

  friend bool operator==(const CombinatorialProfile&, const CombinatorialProfile&) = default;
};

inline CombinatorialProfile profile(const TVector& t, long d) {
  return CombinatorialProfile{d, t, milnor_number(t), melchior_check(t, d)};
}

}  // namespace linefree
