#pragma once

// Graded pieces of the module of Jacobian relations
//   Syz_k = { (a, b, c) in S_k^3 : a f_x + b f_y + c f_z = 0 },
// its minimal generator degrees, and the Hilbert function of S / J_f.
//
// Two routes compute the same numbers. The exact route eliminates over the
// coefficient field in every degree. The modular route eliminates mod a
// 62-bit prime and certifies each dimension: reductions of exact, verified
// syzygies give a lower bound, the mod-p nullity an upper bound, and a
// dimension is accepted only when the two coincide. New generators are
// lifted from F_p by CRT and rational reconstruction and then checked by an
// exact product M v = 0, so every reported syzygy is exact.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "linefree/algebra/elimination.hpp"
#include "linefree/algebra/matrix.hpp"
#include "linefree/algebra/modular.hpp"
#include "linefree/algebra/monomial.hpp"
#include "linefree/algebra/prime_field.hpp"
#include "linefree/detail/parallel.hpp"
#include "linefree/error.hpp"
#include "linefree/syzygy/jacobian.hpp"
#include "linefree/syzygy/polynomial.hpp"

namespace linefree {

enum class Strategy { Exact, Modular, Auto };

struct ComputeOptions {
  Strategy strategy = Strategy::Auto;
  /// First prime of the modular route; implies Strategy::Modular under Auto.
  std::optional<std::uint64_t> modulus;
  /// Worker threads for independent degrees; 0 = hardware concurrency.
  unsigned threads = 1;
};

/// Auto picks exact elimination only for tiny degree. The certified modular
/// route is already ten times faster at d = 5 and forty times at d = 8.
inline constexpr int auto_exact_max_degree = 4;

inline Strategy resolve_strategy(const ComputeOptions& opt, int d) {
  if (opt.strategy != Strategy::Auto) return opt.strategy;
  if (opt.modulus) return Strategy::Modular;
  return d <= auto_exact_max_degree ? Strategy::Exact : Strategy::Modular;
}

namespace detail {

/// Position in S_{k + deg m} of m * b_i for every monomial b_i of S_k.
inline std::vector<std::size_t> shift_map(int k, const Monomial& m) {
  MonomialBasis b = monomial_basis(k);
  std::vector<std::size_t> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = monomial_index(b[i].times(m));
  return out;
}

/// Componentwise product of a triple in S_k^3 (component-major layout) by m.
template <class T>
std::vector<T> multiply_triple(std::span<const T> v, int k, const Monomial& m, const std::vector<std::size_t>& map) {
  const std::size_t n = graded_dimension(k);
  const std::size_t n2 = graded_dimension(k + m.degree());
  std::vector<T> out(3 * n2, T{});
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < n; ++i) out[c * n2 + map[i]] = v[c * n + i];
  return out;
}

}  // namespace detail

/// A Jacobian relation (a, b, c) of degree k, stored as the coefficients of
/// a, b, c in the monomial basis of S_k, one block after the other.
struct Syzygy {
  int degree = 0;
  std::vector<Number> coefficients;

  std::array<HomogeneousPoly, 3> components() const {
    const std::size_t n = graded_dimension(degree);
    std::array<HomogeneousPoly, 3> out;
    for (std::size_t c = 0; c < 3; ++c) {
      std::vector<Number> block(coefficients.begin() + static_cast<std::ptrdiff_t>(c * n),
                                coefficients.begin() + static_cast<std::ptrdiff_t>((c + 1) * n));
      out[c] = HomogeneousPoly::from_dense(degree, block);
    }
    return out;
  }

  Syzygy times(const Monomial& m) const {
    auto map = detail::shift_map(degree, m);
    return Syzygy{degree + m.degree(), detail::multiply_triple<Number>(coefficients, degree, m, map)};
  }
  Syzygy times_variable(int v) const { return times(Monomial::variable(v)); }

  friend bool operator==(const Syzygy&, const Syzygy&) = default;
};

/// a f_x + b f_y + c f_z == 0, checked on polynomials.
inline bool is_relation(const JacobianTriple& j, const Syzygy& s) {
  auto abc = s.components();
  HomogeneousPoly sum;
  for (std::size_t c = 0; c < 3; ++c) sum += abc[c] * j.partials[c];
  return sum.is_zero();
}

struct DegreeRecord {
  int degree = 0;
  std::size_t dimension = 0;
  /// dim Syz_k minus the dimension of S_1 * Syz_{k-1}.
  std::size_t new_generators = 0;
  /// A basis of Syz_k.
  std::vector<Syzygy> basis;
};

enum class Route { Exact, ModularCertified };

struct GradedSyzygyData {
  int d = 0;
  int k_max = 0;
  Route route = Route::Exact;
  std::vector<DegreeRecord> records;
  /// Minimal generators in order of degree.
  std::vector<Syzygy> generators;

  const DegreeRecord* record(long k) const {
    for (const auto& r : records)
      if (r.degree == k) return &r;
    return nullptr;
  }

  std::vector<int> generator_degrees() const {
    std::vector<int> out;
    for (const auto& g : generators) out.push_back(g.degree);
    return out;
  }

  /// Smallest k with Syz_k != 0, if one was reached.
  std::optional<int> mdr() const {
    for (const auto& r : records)
      if (r.dimension > 0) return r.degree;
    return std::nullopt;
  }
};

/// Exact kernel of the map S_k^3 -> S_{k+d-1}.
inline std::vector<Syzygy> syzygy_space(const JacobianTriple& j, int k) {
  std::vector<Syzygy> out;
  for (auto& v : kernel_basis(jacobian_map(j, k))) out.push_back(Syzygy{k, std::move(v)});
  return out;
}

namespace detail {

inline GradedSyzygyData graded_exact(const JacobianTriple& j, int k_max, bool stop_at_first) {
  GradedSyzygyData out{j.d, k_max, Route::Exact, {}, {}};
  std::vector<Syzygy> prev;
  for (int k = 0; k <= k_max; ++k) {
    DegreeRecord rec{k, 0, 0, syzygy_space(j, k)};
    rec.dimension = rec.basis.size();
    if (!rec.basis.empty()) {
      // Columns: x*s, y*s, z*s for s in Syz_{k-1}, then the basis of Syz_k.
      // Pivot columns pick the greedy independent subset, so basis vectors
      // that end up as pivots are exactly the new generators.
      const std::size_t m = 3 * prev.size();
      const std::size_t n3 = 3 * graded_dimension(k);
      Matrix<Number> cols(n3, m + rec.basis.size());
      for (std::size_t p = 0; p < prev.size(); ++p)
        for (int v = 0; v < 3; ++v) {
          Syzygy t = prev[p].times_variable(v);
          for (std::size_t i = 0; i < n3; ++i) cols(i, 3 * p + static_cast<std::size_t>(v)) = t.coefficients[i];
        }
      for (std::size_t b = 0; b < rec.basis.size(); ++b)
        for (std::size_t i = 0; i < n3; ++i) cols(i, m + b) = rec.basis[b].coefficients[i];
      for (std::size_t pc : echelon_info(cols).pivot_columns) {
        if (pc < m) continue;
        out.generators.push_back(rec.basis[pc - m]);
        ++rec.new_generators;
      }
    }
    prev = rec.basis;
    bool found = rec.dimension > 0;
    out.records.push_back(std::move(rec));
    if (stop_at_first && found) break;
  }
  return out;
}

struct ModGenerator {
  Syzygy exact;
  std::vector<std::uint64_t> image;
};

inline std::vector<std::uint64_t> reduce_vector(const Reduction& red, std::span<const Number> v) {
  std::vector<std::uint64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = red(v[i]);
  return out;
}

/// One attempt of the certified modular route with a fresh first prime.
/// Throws LiftFailure (or BadPrime) when that prime turns out to be unlucky.
inline GradedSyzygyData graded_modular(const JacobianTriple& j, int k_max, bool stop_at_first,
                                       const ComputeOptions& opt, PrimeSequence& primes) {
  const FieldSpec spec = j.field();
  const PrimeField f0 = primes.next();
  const Reduction red(f0, spec);

  std::vector<std::optional<std::pair<ModMatrix, ModEchelon>>> echelons(static_cast<std::size_t>(k_max) + 1);
  auto compute = [&](std::size_t k) {
    ModMatrix a = jacobian_map_mod(j, static_cast<int>(k), red);
    ModEchelon e = rref_mod(f0, a);
    echelons[k].emplace(std::move(a), std::move(e));
  };
  if (!stop_at_first) detail::parallel_for(echelons.size(), opt.threads, compute);

  GradedSyzygyData out{j.d, k_max, Route::ModularCertified, {}, {}};
  std::vector<ModGenerator> gens;
  for (int k = 0; k <= k_max; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    if (!echelons[ku]) compute(ku);
    const auto& [rref, ech] = *echelons[ku];
    const std::size_t n3 = 3 * graded_dimension(k);
    const std::size_t upper = n3 - ech.rank();

    // Monomial multiples of the generators found so far span S_1 * Syz_{k-1}.
    ModSpan span(f0, n3);
    DegreeRecord rec{k, 0, 0, {}};
    std::size_t count = 0;
    for (const auto& g : gens) {
      MonomialBasis mons = monomial_basis(k - g.exact.degree);
      for (const Monomial& m : mons.monomials) {
        ++count;
        auto map = shift_map(g.exact.degree, m);
        if (span.add(multiply_triple<std::uint64_t>(g.image, g.exact.degree, m, map))) {
          rec.basis.push_back(g.exact.times(m));
        }
      }
    }
    const std::size_t generated = span.dimension();
    if (generated > upper) throw InternalInconsistency("syzygy lower bound exceeds mod-p nullity");

    if (generated < upper) {
      std::vector<bool> is_pivot(n3, false);
      for (std::size_t c : ech.pivot_columns) is_pivot[c] = true;
      ModSpan trial = span;
      std::vector<std::size_t> chosen;
      for (std::size_t c = 0; c < n3 && trial.dimension() < upper; ++c) {
        if (is_pivot[c]) continue;
        if (trial.add(kernel_vector_mod(f0, rref, ech, c))) chosen.push_back(c);
      }
      auto lifted = lift_kernel_vectors(jacobian_map(j, k), spec, ech.pivot_columns, ech.pivot_rows, chosen, primes);
      for (auto& v : lifted) {
        auto image = reduce_vector(red, v);
        if (!span.add(image)) throw LiftFailure("lifted relation is dependent modulo the first prime");
        Syzygy s{k, std::move(v)};
        rec.basis.push_back(s);
        out.generators.push_back(s);
        gens.push_back(ModGenerator{std::move(s), std::move(image)});
        ++rec.new_generators;
      }
      if (span.dimension() != upper) throw LiftFailure("lifted relations do not reach the mod-p nullity");
      // With relations among the multiples mod p, their exact span could be
      // larger, which would overcount the new generators; settle it exactly.
      if (count > generated) {
        Matrix<Number> u(count, n3);
        std::size_t row = 0;
        for (const auto& g : gens) {
          if (g.exact.degree >= k) continue;
          for (const Monomial& m : monomial_basis(k - g.exact.degree).monomials) {
            Syzygy t = g.exact.times(m);
            for (std::size_t i = 0; i < n3; ++i) u(row, i) = t.coefficients[i];
            ++row;
          }
        }
        if (rank(u) != generated) throw LiftFailure("multiples have fewer relations than modulo the first prime");
      }
    }
    rec.dimension = span.dimension();
    bool found = rec.dimension > 0;
    out.records.push_back(std::move(rec));
    echelons[ku].reset();
    if (stop_at_first && found) break;
  }
  return out;
}

inline GradedSyzygyData graded_dispatch(const JacobianTriple& j, int k_max, bool stop_at_first,
                                        const ComputeOptions& opt) {
  if (k_max < 0) throw std::invalid_argument("negative maximal degree");
  if (resolve_strategy(opt, j.d) == Strategy::Exact) return graded_exact(j, k_max, stop_at_first);
  PrimeSequence primes(j.field(), opt.modulus);
  for (int attempt = 0; attempt < 3; ++attempt) {
    try {
      return graded_modular(j, k_max, stop_at_first, opt, primes);
    } catch (const LiftFailure&) {
    } catch (const BadPrime&) {
      if (attempt == 0 && opt.modulus) throw;
    }
  }
  return graded_exact(j, k_max, stop_at_first);
}

}  // namespace detail

/// Dimensions of Syz_k and minimal generators for k = 0..k_max.
inline GradedSyzygyData graded_syzygies(const JacobianTriple& j, int k_max, const ComputeOptions& opt = {}) {
  return detail::graded_dispatch(j, k_max, false, opt);
}

/// Multiset of minimal generator degrees up to k_max.
inline std::vector<int> generator_degrees(const JacobianTriple& j, int k_max, const ComputeOptions& opt = {}) {
  return graded_syzygies(j, k_max, opt).generator_degrees();
}

/// Minimal degree of a Jacobian relation. The Koszul relations (f_y, -f_x, 0)
/// bound the search by d - 1.
inline int mdr(const JacobianTriple& j, const ComputeOptions& opt = {}) {
  auto data = detail::graded_dispatch(j, std::max(j.d - 1, 0), true, opt);
  if (auto r = data.mdr()) return *r;
  throw InternalInconsistency("no Jacobian relation up to degree d - 1");
}

/// dim (S / J_f)_j computed by exact elimination.
inline long hilbert_function(const JacobianTriple& j, long degree) {
  if (degree < 0) return 0;
  const long dim = static_cast<long>(graded_dimension(static_cast<int>(degree)));
  const long k = degree - j.d + 1;
  if (k < 0) return dim;
  return dim - static_cast<long>(rank(jacobian_map(j, static_cast<int>(k))));
}

namespace detail {

/// dim Syz_k certified from the generators in `data`: the mod-p span of their
/// multiples (a lower bound) against the mod-p nullity (an upper bound).
inline std::optional<std::size_t> certified_syzygy_dimension(const JacobianTriple& j, int k,
                                                             const GradedSyzygyData& data,
                                                             const ComputeOptions& opt) {
  PrimeSequence primes(j.field(), opt.modulus);
  for (int attempt = 0; attempt < 3; ++attempt) {
    try {
      PrimeField f = primes.next();
      Reduction red(f, j.field());
      const std::size_t n3 = 3 * graded_dimension(k);
      const std::size_t upper = n3 - rank_mod(f, jacobian_map_mod(j, k, red));
      ModSpan span(f, n3);
      for (const auto& g : data.generators) {
        if (g.degree > k) continue;
        auto image = reduce_vector(red, g.coefficients);
        for (const Monomial& m : monomial_basis(k - g.degree).monomials) {
          if (span.dimension() == upper) break;
          span.add(multiply_triple<std::uint64_t>(image, g.degree, m, shift_map(g.degree, m)));
        }
      }
      if (span.dimension() == upper) return upper;
    } catch (const BadPrime&) {
      if (attempt == 0 && opt.modulus) throw;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Hilbert function value using already computed syzygy data. Exact whenever
/// it returns; falls back to exact elimination if the data cannot certify.
inline long hilbert_function(const JacobianTriple& j, long degree, const GradedSyzygyData& data,
                             const ComputeOptions& opt = {}) {
  if (degree < 0) return 0;
  const long dim = static_cast<long>(graded_dimension(static_cast<int>(degree)));
  const long k = degree - j.d + 1;
  if (k < 0) return dim;
  const auto n3 = static_cast<long>(3 * graded_dimension(static_cast<int>(k)));
  if (const auto* rec = data.record(k)) return dim - (n3 - static_cast<long>(rec->dimension));
  if (data.route == Route::ModularCertified) {
    if (auto syz = detail::certified_syzygy_dimension(j, static_cast<int>(k), data, opt)) {
      return dim - (n3 - static_cast<long>(*syz));
    }
  }
  return hilbert_function(j, degree);
}

/// The two stabilization points of the Hilbert function.
inline std::array<long, 2> tau_degrees(int d) { return {3L * d - 6, 3L * d - 5}; }

/// Global Tjurina number: the constant value of the Hilbert function from
/// degree 3d - 6 on, checked at two consecutive degrees.
inline long tau_stable(const JacobianTriple& j) {
  auto [a, b] = tau_degrees(j.d);
  long ha = hilbert_function(j, a), hb = hilbert_function(j, b);
  if (ha != hb) throw NotStabilized(ha, hb);
  return ha;
}

inline long tau_stable(const JacobianTriple& j, const GradedSyzygyData& data, const ComputeOptions& opt = {}) {
  auto degrees = tau_degrees(j.d);
  std::array<long, 2> h{};
  detail::parallel_for(2, opt.threads, [&](std::size_t i) { h[i] = hilbert_function(j, degrees[i], data, opt); });
  if (h[0] != h[1]) throw NotStabilized(h[0], h[1]);
  return h[0];
}

struct FreeShape {
  int d1 = 0, d2 = 0;
  friend bool operator==(const FreeShape&, const FreeShape&) = default;
};
struct NearlyFreeShape {
  int d1 = 0, d2 = 0, b = 0;
  friend bool operator==(const NearlyFreeShape&, const NearlyFreeShape&) = default;
};
/// Any other generator pattern. Only generators of degree <= k_max were
/// searched, so the list may be incomplete.
struct OtherShape {
  std::vector<int> degrees;
  int k_max = 0;
  friend bool operator==(const OtherShape&, const OtherShape&) = default;
};
using ResolutionShape = std::variant<FreeShape, NearlyFreeShape, OtherShape>;

inline ResolutionShape resolution_shape(std::vector<int> degrees, int d, int k_max) {
  std::sort(degrees.begin(), degrees.end());
  if (degrees.size() == 2 && degrees[0] + degrees[1] == d - 1) return FreeShape{degrees[0], degrees[1]};
  if (degrees.size() == 3 && degrees[1] == degrees[2] && degrees[0] + degrees[1] == d) {
    return NearlyFreeShape{degrees[0], degrees[1], degrees[1] - d + 2};
  }
  return OtherShape{std::move(degrees), k_max};
}

inline ResolutionShape resolution_shape(const GradedSyzygyData& data) {
  return resolution_shape(data.generator_degrees(), data.d, data.k_max);
}

/// Shape from generators up to degree d.
inline ResolutionShape resolution_shape(const JacobianTriple& j, int d, const ComputeOptions& opt = {}) {
  return resolution_shape(graded_syzygies(j, d, opt));
}

inline std::string to_string(const ResolutionShape& shape) {
  if (auto* f = std::get_if<FreeShape>(&shape)) {
    return "free (" + std::to_string(f->d1) + "," + std::to_string(f->d2) + ")";
  }
  if (auto* n = std::get_if<NearlyFreeShape>(&shape)) {
    return "nearly free (" + std::to_string(n->d1) + "," + std::to_string(n->d2) + ") b=" + std::to_string(n->b);
  }
  const auto& o = std::get<OtherShape>(shape);
  std::string s = "other {";
  for (std::size_t i = 0; i < o.degrees.size(); ++i) s += (i ? "," : "") + std::to_string(o.degrees[i]);
  return s + "} (generators searched up to degree " + std::to_string(o.k_max) + ")";
}

}  // namespace linefree
