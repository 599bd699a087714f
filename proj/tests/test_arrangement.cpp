#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace linefree;
using testing_support::fixture;
using testing_support::from_integers;

TEST(Intersect, Examples) {
  ProjectiveLine x(1, 0, 0), y(0, 1, 0), z(0, 0, 1);
  EXPECT_EQ(intersect(x, y), ProjectivePoint({0, 0, 1}));
  EXPECT_EQ(intersect(ProjectiveLine(1, -1, 0), ProjectiveLine(1, 0, -1)), ProjectivePoint({1, 1, 1}));
  ProjectivePoint p = intersect(ProjectiveLine(1, 1, -1), z);
  EXPECT_EQ(p, ProjectivePoint({1, -1, 0}));
  EXPECT_TRUE(ProjectiveLine(1, 1, -1).contains(p));
  EXPECT_THROW(intersect(x, ProjectiveLine(3, 0, 0)), IdenticalLines);
}

TEST(ProjectiveLine, NormalizationIsScaleInvariantAndIdempotent) {
  ProjectiveLine a(0, 2, -4), b(0, Number(mpq_class(1, 3)), Number(mpq_class(-2, 3)));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a[1], Number(1));
  EXPECT_EQ(ProjectiveLine(a.coefficients()), a);
  Number s = Number::sqrt_of(2);
  ProjectiveLine q(s, 2, 0);
  EXPECT_EQ(q[0], Number(1));
  EXPECT_EQ(q[1], s);
  EXPECT_THROW(ProjectiveLine(0, 0, 0), InvalidLine);
}

TEST(Arrangement, Validation) {
  EXPECT_THROW(Arrangement(FieldSpec::rationals(), {}), InvalidLine);
  EXPECT_THROW(from_integers({{1, 0, 0}, {0, 1, 0}, {2, 0, 0}}), DuplicateLine);
  try {
    from_integers({{1, 0, 0}, {0, 1, 0}, {2, 0, 0}});
  } catch (const DuplicateLine& e) {
    EXPECT_EQ(e.first(), 0u);
    EXPECT_EQ(e.second(), 2u);
  }
  EXPECT_THROW(Arrangement(FieldSpec::rationals(), {ProjectiveLine(1, Number::sqrt_of(2), 0)}), UnsupportedField);
  EXPECT_THROW(Arrangement(FieldSpec::quadratic(3), {ProjectiveLine(1, Number::sqrt_of(2), 0)}), UnsupportedField);
}

TEST(SingularPoints, Examples) {
  auto tri = singular_points(fixture("triangle"));
  EXPECT_EQ(tri.size(), 3u);
  for (const auto& p : tri) EXPECT_EQ(p.multiplicity(), 2u);

  auto nf = singular_points(fixture("non-Fano"));
  EXPECT_EQ(nf.size(), 9u);
  std::size_t triple = 0, dbl = 0;
  for (const auto& p : nf) {
    triple += p.multiplicity() == 3;
    dbl += p.multiplicity() == 2;
    for (std::size_t i : p.incident) EXPECT_TRUE(fixture("non-Fano").lines()[i].contains(p.point));
  }
  EXPECT_EQ(triple, 6u);
  EXPECT_EQ(dbl, 3u);
}

TEST(TVector, MatchesOracleOnFixtures) {
  EXPECT_EQ(t_vector(fixture("triangle")), TVector::from_positional({3}));
  EXPECT_EQ(t_vector(fixture("non-Fano")), TVector::from_positional({3, 6}));
  EXPECT_EQ(t_vector(fixture("near-pencil(4)")), TVector::from_positional({3, 1}));
  for (const auto& e : embedded_realizations().entries) {
    if (!e.field.is_rational()) continue;
    auto o = oracle::t_vector(testing_support::oracle_lines(*e.realization));
    TVector t;
    for (auto [r, c] : o) t.add(r, c);
    EXPECT_EQ(t_vector(*e.realization), t) << e.name;
  }
}

TEST(TVector, PositionalForm) {
  auto t = TVector::from_positional({16, 15, 10, 0, 1, 0, 0});
  EXPECT_EQ(t.to_string(), "(16,15,10,0,1)");
  EXPECT_EQ(t.max_multiplicity(), 6);
  EXPECT_EQ(t[5], 0);
  EXPECT_EQ(t.pair_count(), 17 * 16 / 2);
  EXPECT_THROW(TVector::from_positional({-1}), std::invalid_argument);
}

TEST(Melchior, Examples) {
  EXPECT_TRUE(melchior_check(TVector::from_positional({16, 15, 10, 0, 1}), 17));
  EXPECT_TRUE(melchior_check(TVector::from_positional({3}), 3));
  EXPECT_FALSE(melchior_check(TVector::from_positional({6}), 4));
  // A pencil has t_d = 1 and is excluded.
  EXPECT_FALSE(melchior_check(TVector::from_positional({0, 1}), 3));
  EXPECT_FALSE(melchior_check(TVector::from_positional({1}), 2));
}

TEST(MilnorNumber, Examples) {
  EXPECT_EQ(milnor_number(TVector::from_positional({16, 15, 10, 0, 1})), 191);
  EXPECT_EQ(milnor_number(TVector::from_positional({12, 58, 0, 0, 3})), 319);
  EXPECT_EQ(milnor_number(TVector::from_positional({3})), 3);
}

TEST(MilnorNumber, MergingTwoDoublePointsIntoATripleAddsTwo) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> c(0, 20);
  for (int i = 0; i < 100; ++i) {
    auto t = TVector::from_positional({c(rng) + 2, c(rng), c(rng), c(rng)});
    auto merged = t;
    merged.add(2, -2);
    merged.add(3, 1);
    EXPECT_EQ(milnor_number(merged) - milnor_number(t), 2);
  }
}

TEST(DefiningPolynomial, Examples) {
  auto f = defining_polynomial(fixture("triangle"));
  EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(f.term_count(), 1u);
  EXPECT_EQ(f.coefficient(Monomial{{1, 1, 1}}), Number(1));
  auto g = defining_polynomial(from_integers({{1, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(g.degree(), 2);
  EXPECT_EQ(g.coefficient(Monomial{{1, 1, 0}}), Number(1));

  auto nf = defining_polynomial(fixture("non-Fano"));
  EXPECT_EQ(nf.degree(), 7);
  auto o = oracle::product(testing_support::oracle_lines(fixture("non-Fano")));
  // The expansion has 10 monomials.
  EXPECT_EQ(o.size(), 10u);
  EXPECT_EQ(nf.term_count(), o.size());
  for (const auto& [m, c] : o) EXPECT_EQ(nf.coefficient(Monomial{m}), Number(c));
}

TEST(Property, PairCountIdentityOnRandomArrangements) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dist(1, 10);
  for (int trial = 0; trial < 200; ++trial) {
    int d = dist(rng);
    Arrangement arr = testing_support::random_arrangement(rng, d, 3);
    TVector t = t_vector(arr);
    EXPECT_EQ(t.pair_count(), static_cast<long>(d) * (d - 1) / 2);
    auto p = profile(arr);
    EXPECT_EQ(p.mu, milnor_number(t));
    EXPECT_EQ(p.simplicial, melchior_check(t, d));
  }
}

TEST(Property, TVectorAndMelchiorInvariantUnderCoordinateChange) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> dist(3, 9);
  for (int trial = 0; trial < 50; ++trial) {
    Arrangement arr = testing_support::random_arrangement(rng, dist(rng), 2);
    Arrangement moved = transform(arr, testing_support::random_invertible(rng));
    EXPECT_EQ(t_vector(moved), t_vector(arr));
    EXPECT_EQ(melchior_check(t_vector(moved), static_cast<long>(moved.size())),
              melchior_check(t_vector(arr), static_cast<long>(arr.size())));
  }
}
