#include "common.hpp"
#include "schemekit/catalan.hpp"

using namespace schemekit;
using namespace schemekit::designs;
using namespace schemekit::exact;
using namespace testing_util;

namespace {

Scalar sq(long a, long b = 1) { return Scalar(make_rational(a, b)); }

}  // namespace

TEST(Embedding, Cube) {
  const auto a = analyse("hamming", "d=3,q=2");
  const auto e = embed(a.sc, a.orderings.front());
  EXPECT_EQ(e.m, 3);
  EXPECT_EQ(e.cosines, (std::vector<Scalar>{1, sq(1, 3), sq(-1, 3), -1}));
  EXPECT_EQ(e.multiplicities, (std::vector<long>{1, 3, 3, 1}));
}

TEST(Embedding, Petersen) {
  const auto a = analyse("petersen");
  const auto e = embed(a.sc, ordering_with_m(a, 5));
  EXPECT_EQ(e.m, 5);
  EXPECT_EQ(e.cosines, (std::vector<Scalar>{1, sq(1, 3), sq(-1, 3)}));
  EXPECT_EQ(e.multiplicities, (std::vector<long>{1, 3, 6}));
}

TEST(Embedding, Simplex) {
  for (long n : {3, 4, 5, 10}) {
    const auto a = analyse("complete", "n=" + std::to_string(n));
    const auto e = embed(a.sc, a.orderings.front());
    EXPECT_EQ(e.m, n - 1);
    EXPECT_EQ(e.cosines, (std::vector<Scalar>{1, sq(-1, n - 1)}));
  }
}

TEST(Embedding, RepeatedRowsRejected) {
  // the rank n-1 idempotent of the cocktail party graph identifies antipodes
  const auto sc = validate_scheme(generators::cocktail_party(4));
  std::size_t j_bad = 0;
  for (std::size_t j = 1; j <= sc.d; ++j)
    if (sc.multiplicities[j] == 3) j_bad = j;
  ASSERT_NE(j_bad, 0u);
  EXPECT_EQ(kind_of([&] { embed_idempotent(sc, j_bad); }), ErrorKind::RepeatedRows);
}

TEST(Moment, Values) {
  const auto p = analyse("petersen");
  const auto ep = embed(p.sc, ordering_with_m(p, 5));
  EXPECT_EQ(moment(ep, 2), sq(1, 5));
  EXPECT_EQ(moment(ep, 3), sq(4, 45));
  const auto k4 = analyse("complete", "n=4");
  EXPECT_EQ(moment(embed(k4.sc, k4.orderings.front()), 2), sq(1, 3));
  const auto cube = analyse("hamming", "d=3,q=2");
  const auto ec = embed(cube.sc, cube.orderings.front());
  EXPECT_EQ(moment(ec, 4), sq(7, 27));
  EXPECT_EQ(moment(ec, 1), Scalar(0));
  EXPECT_EQ(moment(ec, 3), Scalar(0));
  EXPECT_EQ(moment(ec, 5), Scalar(0));
  EXPECT_EQ(moment(ec, 0), Scalar(1));
}

TEST(Moment, IcosahedronIsRationalDespiteIrrationalCosines) {
  const auto a = analyse("icosahedron");
  const auto e = embed(a.sc, a.orderings.front());
  EXPECT_FALSE(e.cosines[1].is_rational());
  for (std::size_t i = 0; i <= 6; ++i) EXPECT_TRUE(moment(e, i).is_rational());
}

TEST(Strength, MomentRoute) {
  const auto p = analyse("petersen");
  EXPECT_EQ(strength_by_moments(embed(p.sc, ordering_with_m(p, 5)), 4).t, 2u);
  const auto c = analyse("hamming", "d=3,q=2");
  EXPECT_EQ(strength_by_moments(embed(c.sc, c.orderings.front()), 6).t, 3u);
  const auto i = analyse("icosahedron");
  EXPECT_EQ(strength_by_moments(embed(i.sc, i.orderings.front()), 6).t, 5u);
}

TEST(Strength, KreinRoute) {
  const auto i = analyse("icosahedron");
  for (const auto& o : i.orderings) {
    EXPECT_EQ(o.m, 3);
    EXPECT_EQ(o.a_star[1], 0);
    EXPECT_EQ(o.a_star[2], 0);
    EXPECT_EQ(o.c_star[2], make_rational(6, 5));
    EXPECT_EQ(strength_by_krein(o, 6).t, 5u);
  }
  const auto c = analyse("hamming", "d=3,q=2");
  EXPECT_EQ(strength_by_krein(c.orderings.front(), 6).t, 3u);
}

TEST(Strength, AlwaysTwoDesign) {
  for (const auto& spec : generators::corpus()) {
    const auto a = analyse(generators::generate(spec));
    for (const auto& o : a.orderings) EXPECT_GE(strength_by_krein(o, 2 * o.a_star.size() - 2).t, 2u) << spec.label();
  }
}

TEST(Strength, ReportShape) {
  const auto p = analyse("petersen");
  const auto r = strength_by_moments(embed(p.sc, p.orderings.front()), 4, 6);
  EXPECT_EQ(r.t_max, 4u);
  EXPECT_EQ(r.residuals.size(), 6u);
  EXPECT_EQ(r.route, Route::MomentCriterion);
  EXPECT_EQ(r.residuals[0].degree, 1u);
  EXPECT_TRUE(r.residuals[1].pass);
  EXPECT_FALSE(r.residuals[2].pass);
  EXPECT_EQ(r.probe_t, 2u);
}

TEST(Strength, CycleProbeBeyondCap) {
  // C7 has d = 3 so the cap is 6; the probe shows the heptagon is a 6-design
  const auto a = analyse("cycle", "n=7");
  for (const auto& o : a.orderings) {
    const auto e = embed(a.sc, o);
    const auto r = strength_by_moments(e, 6, 10);
    EXPECT_EQ(r.t, 6u);
    EXPECT_EQ(r.probe_t, 6u);
  }
}

TEST(KreinMomentIdentity, LowDegrees) {
  const auto p = analyse("petersen");
  const auto& o = ordering_with_m(p, 5);
  for (std::size_t i = 1; i <= 4; ++i) EXPECT_TRUE(krein_moment_identity(p.sc, p.kt, o, i)) << i;
  const auto b = catalan::catalan_numbers(weight_triple(o));
  EXPECT_EQ(b[3] / pow(Rational(5), 3), make_rational(4, 45));
}
