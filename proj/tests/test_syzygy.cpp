#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"

using namespace linefree;
using testing_support::fixture;
using testing_support::from_integers;

namespace {

JacobianTriple jac(const Arrangement& arr) { return jacobian(defining_polynomial(arr)); }

ComputeOptions with(Strategy s) {
  ComputeOptions o;
  o.strategy = s;
  return o;
}

std::multiset<int> as_multiset(const std::vector<int>& v) { return {v.begin(), v.end()}; }

const std::vector<std::string> fixture_names{"triangle", "near-pencil(4)", "near-pencil(5)",
                                             "near-pencil(6)", "generic-4",      "non-Fano"};

}  // namespace

TEST(Jacobian, Examples) {
  auto j = jac(fixture("triangle"));
  EXPECT_EQ(j.partials[0].to_string(), "(1)*y*z");
  EXPECT_EQ(j.partials[1].to_string(), "(1)*x*z");
  EXPECT_EQ(j.partials[2].to_string(), "(1)*x*y");

  HomogeneousPoly sq(2);
  sq.add_term(Monomial{{2, 0, 0}}, 1);
  auto js = jacobian(sq);
  EXPECT_EQ(js.partials[0], HomogeneousPoly::linear(2, 0, 0));
  EXPECT_TRUE(js.partials[1].is_zero());
  EXPECT_TRUE(js.partials[2].is_zero());

  auto f = defining_polynomial(fixture("non-Fano"));
  auto jn = jacobian(f);
  for (const auto& p : jn.partials) {
    EXPECT_EQ(p.degree(), 6);
  }
  EXPECT_TRUE(euler_identity_holds(f, jn));
  auto o = oracle::jacobian(testing_support::oracle_lines(fixture("non-Fano")));
  for (int v = 0; v < 3; ++v) {
    EXPECT_EQ(jn.partials[static_cast<std::size_t>(v)].term_count(), o.partials[static_cast<std::size_t>(v)].size());
    for (const auto& [m, c] : o.partials[static_cast<std::size_t>(v)]) {
      EXPECT_EQ(jn.partials[static_cast<std::size_t>(v)].coefficient(Monomial{m}), Number(c));
    }
  }
}

TEST(Jacobian, EulerIdentityForEveryRealization) {
  for (const auto& e : embedded_realizations().entries) {
    auto f = defining_polynomial(*e.realization);
    EXPECT_TRUE(euler_identity_holds(f, jacobian(f))) << e.name;
  }
}

TEST(SyzygySpace, Examples) {
  auto j = jac(fixture("triangle"));
  EXPECT_TRUE(syzygy_space(j, 0).empty());
  auto s1 = syzygy_space(j, 1);
  EXPECT_EQ(s1.size(), 2u);
  // (x, -y, 0) is in the span: check membership via rank.
  Syzygy target{1, {1, 0, 0, 0, -1, 0, 0, 0, 0}};
  EXPECT_TRUE(is_relation(j, target));
  Matrix<Number> m(3, 9);
  for (std::size_t i = 0; i < 9; ++i) {
    m(0, i) = s1[0].coefficients[i];
    m(1, i) = s1[1].coefficients[i];
    m(2, i) = target.coefficients[i];
  }
  EXPECT_EQ(rank(m), 2u);
  EXPECT_EQ(syzygy_space(jac(fixture("near-pencil(4)")), 1).size(), 1u);
}

TEST(SyzygySpace, DimensionsMatchOracle) {
  for (const auto& name : fixture_names) {
    auto j = jac(fixture(name));
    auto o = oracle::jacobian(testing_support::oracle_lines(fixture(name)));
    for (int k = 0; k <= j.d; ++k) {
      auto basis = syzygy_space(j, k);
      EXPECT_EQ(basis.size(), oracle::syzygy_dimension(o, k)) << name << " k=" << k;
      for (const auto& s : basis) {
        EXPECT_TRUE(is_relation(j, s));
      }
    }
  }
}

TEST(SyzygySpace, KoszulRelationsAppearInDegreeDMinusOne) {
  for (const auto& name : fixture_names) {
    auto j = jac(fixture(name));
    const int k = j.d - 1;
    auto basis = syzygy_space(j, k);
    const std::size_t n = graded_dimension(k);
    auto koszul = [&](std::size_t a, std::size_t b) {
      // (.., f_b, .., -f_a, ..) in components a and b.
      Syzygy s{k, std::vector<Number>(3 * n)};
      auto fb = j.partials[b].dense(), fa = j.partials[a].dense();
      for (std::size_t i = 0; i < n; ++i) {
        s.coefficients[a * n + i] = fb[i];
        s.coefficients[b * n + i] = -fa[i];
      }
      return s;
    };
    for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {1, 2}}) {
      Syzygy s = koszul(a, b);
      EXPECT_TRUE(is_relation(j, s)) << name;
      Matrix<Number> m(basis.size() + 1, 3 * n);
      for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t i = 0; i < 3 * n; ++i) m(r, i) = basis[r].coefficients[i];
      for (std::size_t i = 0; i < 3 * n; ++i) m(basis.size(), i) = s.coefficients[i];
      EXPECT_EQ(rank(m), basis.size()) << name;
    }
  }
}

TEST(Mdr, Examples) {
  EXPECT_EQ(mdr(jac(fixture("triangle"))), 1);
  EXPECT_EQ(mdr(jac(fixture("generic-4"))), 2);
  EXPECT_EQ(mdr(jac(fixture("non-Fano"))), 3);
  for (const auto& name : fixture_names) {
    auto o = oracle::jacobian(testing_support::oracle_lines(fixture(name)));
    for (Strategy s : {Strategy::Exact, Strategy::Modular}) {
      EXPECT_EQ(static_cast<std::size_t>(mdr(jac(fixture(name)), with(s))), oracle::first_nonzero_syzygy_degree(o))
          << name;
    }
  }
}

TEST(HilbertFunction, Examples) {
  auto tri = jac(fixture("triangle"));
  EXPECT_EQ(hilbert_function(tri, 0), 1);
  EXPECT_EQ(hilbert_function(tri, 4), 3);
  EXPECT_EQ(hilbert_function(jac(fixture("near-pencil(4)")), 7), 7);
  for (const auto& name : fixture_names) {
    auto j = jac(fixture(name));
    auto o = oracle::jacobian(testing_support::oracle_lines(fixture(name)));
    for (int deg = 0; deg <= 3 * j.d - 5; ++deg) {
      long h = hilbert_function(j, deg);
      EXPECT_EQ(h, oracle::hilbert(o, deg)) << name << " degree " << deg;
      if (deg < j.d - 1) {
        EXPECT_EQ(h, static_cast<long>(graded_dimension(deg)));
      }
    }
  }
}

TEST(TauStable, Examples) {
  EXPECT_EQ(tau_stable(jac(fixture("triangle"))), 3);
  EXPECT_EQ(tau_stable(jac(fixture("near-pencil(4)"))), 7);
  EXPECT_EQ(tau_stable(jac(fixture("generic-4"))), 6);
  for (const auto& e : embedded_realizations().entries) {
    auto j = jac(*e.realization);
    for (Strategy s : {Strategy::Exact, Strategy::Modular}) {
      auto data = graded_syzygies(j, j.d, with(s));
      EXPECT_EQ(tau_stable(j, data, with(s)), milnor_number(e.t)) << e.name;
    }
    EXPECT_EQ(tau_stable(j), milnor_number(e.t)) << e.name;
  }
}

TEST(GeneratorDegrees, ExamplesAndOracle) {
  EXPECT_EQ(as_multiset(generator_degrees(jac(fixture("triangle")), 3)), (std::multiset<int>{1, 1}));
  EXPECT_EQ(as_multiset(generator_degrees(jac(fixture("generic-4")), 4)), (std::multiset<int>{2, 2, 2}));
  EXPECT_EQ(as_multiset(generator_degrees(jac(fixture("non-Fano")), 7)), (std::multiset<int>{3, 3}));
  for (const auto& name : fixture_names) {
    auto j = jac(fixture(name));
    auto o = oracle::jacobian(testing_support::oracle_lines(fixture(name)));
    auto expected = oracle::generator_degrees(o, j.d);
    for (Strategy s : {Strategy::Exact, Strategy::Modular}) {
      EXPECT_EQ(as_multiset(generator_degrees(j, j.d, with(s))), expected) << name;
    }
  }
}

TEST(GradedSyzygies, RoutesAgreeAndRecordsAreConsistent) {
  for (const auto& e : embedded_realizations().entries) {
    auto j = jac(*e.realization);
    auto exact = graded_syzygies(j, j.d, with(Strategy::Exact));
    auto modular = graded_syzygies(j, j.d, with(Strategy::Modular));
    EXPECT_EQ(exact.route, Route::Exact);
    EXPECT_EQ(modular.route, Route::ModularCertified);
    ASSERT_EQ(exact.records.size(), modular.records.size());
    for (std::size_t k = 0; k < exact.records.size(); ++k) {
      const auto& a = exact.records[k];
      const auto& b = modular.records[k];
      EXPECT_EQ(a.dimension, b.dimension) << e.name << " k=" << k;
      EXPECT_EQ(a.new_generators, b.new_generators) << e.name << " k=" << k;
      EXPECT_EQ(b.basis.size(), b.dimension);
      for (const auto& s : b.basis) {
        EXPECT_TRUE(is_relation(j, s));
      }
      if (k > 0) {
        EXPECT_GE(a.dimension + 0, exact.records[k - 1].dimension);
      }
    }
    // Both routes choose the same canonical generators.
    EXPECT_EQ(exact.generators, modular.generators) << e.name;
  }
}

TEST(GradedSyzygies, ThreadCountDoesNotChangeResults) {
  auto j = jac(fixture("non-Fano"));
  ComputeOptions one = with(Strategy::Modular), many = with(Strategy::Modular);
  many.threads = 4;
  auto a = graded_syzygies(j, 7, one), b = graded_syzygies(j, 7, many);
  EXPECT_EQ(a.generators, b.generators);
  EXPECT_EQ(tau_stable(j, a, one), tau_stable(j, b, many));
}

TEST(ResolveStrategy, AutoAndOverrides) {
  ComputeOptions o;
  EXPECT_EQ(resolve_strategy(o, auto_exact_max_degree), Strategy::Exact);
  EXPECT_EQ(resolve_strategy(o, auto_exact_max_degree + 1), Strategy::Modular);
  o.strategy = Strategy::Exact;
  EXPECT_EQ(resolve_strategy(o, 30), Strategy::Exact);
}

TEST(GradedSyzygies, UserModulus) {
  auto j = jac(fixture("generic-4"));
  ComputeOptions o;
  o.modulus = 1000003;
  EXPECT_EQ(resolve_strategy(o, 4), Strategy::Modular);
  auto data = graded_syzygies(j, 4, o);
  EXPECT_EQ(as_multiset(data.generator_degrees()), (std::multiset<int>{2, 2, 2}));
  // Even a tiny prime only changes the work, never the answer.
  o.modulus = 5;
  EXPECT_EQ(as_multiset(graded_syzygies(j, 4, o).generator_degrees()), (std::multiset<int>{2, 2, 2}));
  o.modulus = 8;
  EXPECT_THROW(graded_syzygies(j, 4, o), BadPrime);
}

TEST(ResolutionShape, Examples) {
  EXPECT_EQ(resolution_shape(jac(fixture("non-Fano")), 7), ResolutionShape(FreeShape{3, 3}));
  EXPECT_EQ(resolution_shape(jac(fixture("generic-4")), 4), ResolutionShape(NearlyFreeShape{2, 2, 0}));
  EXPECT_EQ(resolution_shape({4, 5, 5}, 9, 9), ResolutionShape(NearlyFreeShape{4, 5, -2}));
  EXPECT_EQ(resolution_shape({2, 3, 3, 3}, 6, 6), ResolutionShape(OtherShape{{2, 3, 3, 3}, 6}));
  EXPECT_EQ(to_string(ResolutionShape(FreeShape{1, 2})), "free (1,2)");
}

TEST(ResolutionShape, GeneratorDegreeSums) {
  for (const auto& name : fixture_names) {
    auto j = jac(fixture(name));
    auto data = graded_syzygies(j, j.d);
    auto shape = resolution_shape(data);
    auto degrees = data.generator_degrees();
    int sum = 0;
    for (int g : degrees) sum += g;
    if (std::holds_alternative<FreeShape>(shape)) {
      EXPECT_EQ(sum, j.d - 1);
    }
    if (auto* n = std::get_if<NearlyFreeShape>(&shape)) {
      EXPECT_EQ(sum, j.d + n->d2);
    }
  }
}

TEST(Syzygy, QuadraticFieldRoutesAgree) {
  auto& arr = fixture("near-pencil-sqrt2(4)");
  auto j = jac(arr);
  EXPECT_EQ(j.field(), FieldSpec::quadratic(2));
  auto exact = graded_syzygies(j, 4, with(Strategy::Exact));
  auto modular = graded_syzygies(j, 4, with(Strategy::Modular));
  EXPECT_EQ(exact.generators, modular.generators);
  EXPECT_EQ(as_multiset(exact.generator_degrees()), (std::multiset<int>{1, 2}));
  EXPECT_EQ(tau_stable(j, modular, with(Strategy::Modular)), 7);
}

TEST(Property, MdrInvariantUnderCoordinateChange) {
  std::mt19937_64 rng(99);
  std::vector<int> reference;
  for (const auto& name : fixture_names) reference.push_back(mdr(jac(fixture(name))));
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t i = static_cast<std::size_t>(trial) % fixture_names.size();
    Arrangement moved = transform(fixture(fixture_names[i]), testing_support::random_invertible(rng));
    EXPECT_EQ(mdr(jac(moved)), reference[i]) << fixture_names[i];
  }
}
