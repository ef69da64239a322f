#include <algorithm>
#include <random>

#include "common.hpp"
#include "schemekit/catalan.hpp"

using namespace schemekit;
using namespace schemekit::catalan;
using namespace schemekit::exact;
using namespace testing_util;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

WeightTriple cube_triple() { return make_weights({0, 0, 0, 0}, {0, 1, 2, 3}, 3); }

WeightTriple pentagon_triple() { return make_weights({0, 0, 1}, {0, 1, 1}, 2); }

std::vector<Rational> tail(const std::vector<Rational>& b) { return {b.begin() + 1, b.end()}; }

}  // namespace

TEST(Weights, Validation) {
  EXPECT_NO_THROW(validate(cube_triple()));
  EXPECT_EQ(cube_triple().b, (std::vector<Rational>{3, 2, 1, 0}));
  EXPECT_EQ(kind_of([] { make_weights({0, 0}, {0, 2}, 3); }), ErrorKind::InvalidWeights);  // c_1* != 1
  EXPECT_EQ(kind_of([] { make_weights({1, 0}, {0, 1}, 1); }), ErrorKind::InvalidWeights);  // a_0* != 0
  EXPECT_EQ(kind_of([] { make_weights({0, 0, 4}, {0, 1, 1}, 3); }), ErrorKind::InvalidWeights);
}

TEST(Weights, SphereWeights) {
  const auto w = sphere_weights(3, 3);
  EXPECT_EQ(w.c[2], q(6, 5));
  EXPECT_EQ(w.c[3], 3);
  for (const auto& a : w.a) EXPECT_EQ(a, 0);
}

TEST(CatalanMatrix, Shape) {
  const auto cm = catalan_matrix(cube_triple());
  EXPECT_EQ(cm.at(0, 0), 1);
  EXPECT_TRUE(cm.contains(6, 0));
  EXPECT_FALSE(cm.contains(4, 3));
  EXPECT_EQ(cm.or_zero(1, 2), 0);
  EXPECT_EQ(kind_of([&] { cm.at(2, 3); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(cm.at(1, 1), 1);
  EXPECT_EQ(cm.at(2, 0), 3);  // b_0*
  EXPECT_EQ(cm.at(3, 3), 6);  // c_1* c_2* c_3*
}

TEST(CatalanMatrix, SphereRegression) {
  for (long m = 3; m <= 8; ++m) {
    const auto cm = catalan_matrix(sphere_weights(m, 3));
    EXPECT_EQ(cm.at(3, 1), q(3 * m * m, m + 2));
    EXPECT_EQ(cm.at(3, 1), sphere_catalan_closed_form(m, 3, 1));
  }
}

TEST(CatalanMatrix, MatchesPathOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto w = random_weights(rng, 4);
    const auto cm = catalan_matrix(w);
    for (std::size_t n = 0; n <= 8; ++n)
      for (std::size_t k = 0; k <= n && n + k <= 8; ++k) EXPECT_EQ(cm.at(n, k), path_weight_enumeration(w, n, k));
    EXPECT_EQ(cm, path_weight_table(w));
  }
}

TEST(CatalanMatrix, PathOracleBaseCases) {
  const auto w = cube_triple();
  EXPECT_EQ(path_weight_enumeration(w, 1, 1), 1);
  EXPECT_EQ(path_weight_enumeration(w, 2, 0), 3);
  EXPECT_EQ(path_weight_enumeration(w, 0, 0), 1);
}

TEST(CatalanNumbers, LowOrder) {
  std::mt19937_64 rng(11);
  const auto w = random_weights(rng, 3);
  const auto b = catalan_numbers(w);
  ASSERT_EQ(b.size(), 7u);
  EXPECT_EQ(b[0], 1);
  EXPECT_EQ(b[1], 0);
  EXPECT_EQ(b[2], w.m);
  EXPECT_EQ(b[3], w.m * w.a[1]);
  EXPECT_EQ(b[4], w.m * (w.m + w.a[1] * w.a[1] + w.b[1] * w.c[2]));
}

TEST(WeightsFromMatrix, Recovers) {
  std::mt19937_64 rng(3);
  const auto w = random_weights(rng, 4);
  const auto pw = weights_from_matrix(catalan_matrix(w));
  for (std::size_t i = 0; i < pw.c.size(); ++i) EXPECT_EQ(pw.c[i], w.c[i]);
  for (std::size_t i = 0; i < pw.a.size(); ++i) EXPECT_EQ(pw.a[i], w.a[i]);
  EXPECT_GE(pw.c.size(), 5u);
}

TEST(Recover, SphereMomentsMThree) {
  std::vector<Rational> moments;
  for (std::size_t i = 1; i <= 5; ++i) moments.push_back(sphere_moments(3, i) * pow(Rational(3), i));
  const auto r = recover_weights(moments, 3);
  ASSERT_GE(r.a.size(), 3u);
  ASSERT_GE(r.c.size(), 3u);
  EXPECT_EQ(r.a[1], 0);
  EXPECT_EQ(r.a[2], 0);
  EXPECT_EQ(r.c[2], q(6, 5));
}

TEST(Recover, ShortInputs) {
  const auto one = recover_weights({Rational(0)}, 4);
  EXPECT_EQ(one.a, (std::vector<Rational>{0}));
  const auto two = recover_weights({Rational(0), Rational(4)}, 4);
  EXPECT_EQ(two.a, (std::vector<Rational>{0}));
  EXPECT_EQ(two.c, (std::vector<Rational>{0, 1}));
}

TEST(Recover, Inconsistent) {
  EXPECT_EQ(kind_of([] { recover_weights({Rational(0), Rational(5)}, 4); }), ErrorKind::InconsistentMoments);
  EXPECT_EQ(kind_of([] { recover_weights({Rational(1)}, 4); }), ErrorKind::InconsistentMoments);
  EXPECT_NE(detail_of([] { recover_weights({Rational(0), Rational(5)}, 4); }).find("t = 2"), std::string::npos);
}

TEST(Recover, RoundTripDepthSix) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto w = random_weights(rng, 6);
    const auto r = recover_weights(tail(catalan_numbers(w)), w.m);
    // B_1..B_{2d} fix c_0..c_d* and a_0..a_{d-1}*
    EXPECT_EQ(r.c, w.c);
    ASSERT_EQ(r.a.size(), w.d);
    EXPECT_TRUE(std::equal(r.a.begin(), r.a.end(), w.a.begin()));
  }
}

TEST(SphereMoments, Values) {
  EXPECT_EQ(sphere_moments(5, 1), 0);
  EXPECT_EQ(sphere_moments(5, 2), q(1, 5));
  EXPECT_EQ(sphere_moments(3, 4), q(1, 5));
  EXPECT_EQ(sphere_moments(3, 3), 0);
  EXPECT_EQ(sphere_moments(4, 0), 1);
}

TEST(SphereMoments, ClosedForm) {
  for (long m = 3; m <= 8; ++m) {
    EXPECT_EQ(sphere_catalan_closed_form(m, 2, 0), m);
    EXPECT_EQ(sphere_catalan_closed_form(m, 3, 1), q(3 * m * m, m + 2));
    EXPECT_EQ(sphere_catalan_closed_form(m, 1, 0), 0);
    EXPECT_EQ(sphere_catalan_closed_form(m, 4, 0), sphere_moments(m, 4) * pow(Rational(m), 4));
  }
}

TEST(SphereWeightCheck, Examples) {
  for (std::size_t t = 1; t <= 4; ++t) EXPECT_TRUE(sphere_weight_check(pentagon_triple(), t)) << t;
  EXPECT_TRUE(sphere_weight_check(cube_triple(), 3));
  EXPECT_FALSE(sphere_weight_check(cube_triple(), 4));
  EXPECT_FALSE(sphere_weight_check(make_weights({0, q(1, 2), 0}, {0, 1, 3}, 3), 3));
}

TEST(OrthogonalPolys, LowDegrees) {
  std::mt19937_64 rng(9);
  const auto w = random_weights(rng, 3);
  const auto v = orthogonal_polys(w);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[0], Poly{Rational(1)});
  EXPECT_EQ(v[1], (Poly{Rational(0), Rational(1)}));
  EXPECT_EQ(v[2], (Poly{-w.b[0], -w.a[1], Rational(1)}) * (Rational(1) / w.c[2]));
}

TEST(Expansion, Holds) {
  std::mt19937_64 rng(13);
  const auto w = random_weights(rng, 5);
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_TRUE(expansion_coeffs_check(w, n));
  const auto s = sphere_weights(4, 4);
  EXPECT_TRUE(expansion_coeffs_check(s, 4));
}

TEST(Gegenbauer, Values) {
  for (long m = 2; m <= 6; ++m) {
    EXPECT_EQ(gegenbauer(m, 0), Poly{Rational(1)});
    EXPECT_EQ(gegenbauer(m, 1), (Poly{Rational(0), Rational(m)}));
    EXPECT_EQ(gegenbauer(m, 2), (Poly{q(-(m + 2), 2), Rational(0), q(m * (m + 2), 2)}));
  }
}

TEST(Gegenbauer, MonomialExpansion) {
  for (long m = 3; m <= 8; ++m) {
    const auto e = monomial_in_gegenbauer(m, 2);
    EXPECT_EQ(e.g[0], q(1, m));
    EXPECT_EQ(e.h[0], m);
    EXPECT_TRUE(e.verified);
    for (std::size_t n = 0; n <= 8; ++n) EXPECT_TRUE(monomial_in_gegenbauer(m, n).verified);
  }
}
