#include <set>

#include "common.hpp"
#include "schemekit/catalan.hpp"

using namespace schemekit;
using namespace schemekit::derived;
using namespace schemekit::exact;
using namespace testing_util;

TEST(DualIntersection, HoldsOnPetersenAndCube4) {
  EXPECT_TRUE(dual_intersection_identity(validate_scheme(generators::petersen())));
  EXPECT_TRUE(dual_intersection_identity(validate_scheme(generators::hamming(4, 2))));
}

TEST(DualIntersection, LiteralIndexReadingFails) {
  // sum over the upper index, sum_j q_h(j) p_{i,i}^j, does not give k_i q_h(i)^2 / m_h
  const auto sc = validate_scheme(generators::petersen());
  bool all_equal = true;
  for (std::size_t h = 0; h <= sc.d; ++h)
    for (std::size_t i = 0; i <= sc.d; ++i) {
      Scalar lhs(0);
      for (std::size_t j = 0; j <= sc.d; ++j) lhs += sc.Q(j, h) * Scalar(sc.intersection(i, i, j));
      const Scalar rhs = Scalar(sc.valencies[i]) * sc.Q(i, h) * sc.Q(i, h) / Scalar(sc.multiplicities[h]);
      if (lhs != rhs) all_equal = false;
    }
  EXPECT_FALSE(all_equal);
}

TEST(DerivedDesign, CubeSixClassOne) {
  const auto a = analyse("hamming", "d=6,q=2");
  const auto& o = a.orderings.front();
  const auto dd = derived_design(a.sc, o, 1);
  EXPECT_EQ(dd.theta0, 6);
  EXPECT_EQ(dd.size, 6);
  long total = 0;
  for (const auto& an : dd.angles) {
    EXPECT_LE(an.relation, 2u);
    total += an.multiplicity;
  }
  EXPECT_EQ(total, 6);
  EXPECT_EQ(derived_moment(dd, 2), Scalar(make_rational(1, 5)));
  EXPECT_EQ(derived_moment(dd, 2), Scalar(catalan::sphere_moments(5, 2)));
  EXPECT_TRUE(derived_predicates(o, dd.thetai, 2));
  EXPECT_GE(derived_strength_by_moments(dd, 12).t, 2u);
}

TEST(DerivedDesign, PetersenClassOne) {
  const auto a = analyse("petersen");
  const auto dd = derived_design(a.sc, ordering_with_m(a, 5), 1);
  std::set<std::size_t> rels;
  for (const auto& an : dd.angles) rels.insert(an.relation);
  for (std::size_t j = 0; j <= a.sc.d; ++j) EXPECT_EQ(rels.count(j) == 1, a.sc.intersection(1, j, 1) != 0) << j;
  const auto r = derived_strength_by_moments(dd, 4);
  EXPECT_EQ(r.t, 1u);
  EXPECT_EQ(r.residuals.size(), 4u);
}

TEST(DerivedDesign, AntipodalSetHasNoOddMoments) {
  const auto a = analyse("hamming", "d=6,q=2");
  const auto dd = derived_design(a.sc, a.orderings.front(), 3);
  EXPECT_EQ(dd.thetai, Scalar(0));
  for (std::size_t h = 1; h <= 7; h += 2) EXPECT_EQ(derived_moment(dd, h), Scalar(0));
}

TEST(DerivedDesign, Errors) {
  const auto a = analyse("hamming", "d=3,q=2");
  const auto& o = a.orderings.front();
  EXPECT_EQ(kind_of([&] { derived_design(a.sc, o, 0); }), ErrorKind::SelfClass);
  EXPECT_EQ(kind_of([&] { derived_design(a.sc, o, 3); }), ErrorKind::AntipodalClass);
  const auto c = analyse("cycle", "n=7");
  const auto dd = derived_design(c.sc, c.orderings.front(), 1);
  EXPECT_EQ(kind_of([&] { derived_strength_by_moments(dd, 4); }), ErrorKind::DegenerateSphere);
  const auto p = analyse("petersen");
  EXPECT_EQ(kind_of([&] { derived_predicates(p.orderings.front(), Scalar(1), 2); }), ErrorKind::HypothesisUnmet);
}

TEST(DerivedMoment, TwoRoutesAgreeOnCorpus) {
  for (const auto& spec : generators::corpus()) {
    SCOPED_TRACE(spec.label());
    const auto a = analyse(generators::generate(spec));
    for (const auto& o : a.orderings)
      for (std::size_t i = 1; i <= a.sc.d; ++i) {
        DerivedDesign dd;
        try {
          dd = derived_design(a.sc, o, i);
        } catch (const Error& e) {
          EXPECT_TRUE(e.kind() == ErrorKind::AntipodalClass || e.kind() == ErrorKind::RepeatedRows) << e.what();
          continue;
        }
        for (std::size_t h = 0; h <= a.sc.d; ++h) EXPECT_EQ(derived_moment(dd, h), derived_moment_expansion(dd, o, h)) << i << " " << h;
      }
  }
}

TEST(Predicates, ZeroProducts) {
  const auto a = analyse("hamming", "d=6,q=2");
  const auto& o = a.orderings.front();
  for (std::size_t i = 1; i < 6; ++i) EXPECT_TRUE(derived_predicates(o, a.sc.Q(i, o.perm[1]), 2));
}

TEST(PPolynomial, Families) {
  EXPECT_TRUE(is_ppolynomial(validate_scheme(generators::cycle(7))));
  EXPECT_TRUE(is_ppolynomial(validate_scheme(generators::hamming(3, 2))));
  EXPECT_TRUE(is_ppolynomial(validate_scheme(generators::petersen())));
  EXPECT_TRUE(is_ppolynomial(validate_scheme(generators::complete(5))));
  // johnson(5,2) labels the complement graph first; A_2 is the Petersen graph
  const auto j = validate_scheme(generators::johnson(5, 2));
  const auto perm = ppolynomial_ordering(j);
  ASSERT_TRUE(perm.has_value());
}

TEST(BoundCheck, Examples) {
  const auto p = analyse("petersen");
  const auto bp = pq_strength_bound_check(p.sc, ordering_with_m(p, 5));
  EXPECT_TRUE(bp.in_hypothesis);
  EXPECT_EQ(bp.strength, 2u);
  EXPECT_FALSE(bp.violation);
  const auto i = analyse("icosahedron");
  const auto bi = pq_strength_bound_check(i.sc, i.orderings.front());
  EXPECT_TRUE(bi.in_hypothesis);
  EXPECT_EQ(bi.strength, 5u);
  const auto c = analyse("cycle", "n=11");
  const auto bc = pq_strength_bound_check(c.sc, c.orderings.front());
  EXPECT_FALSE(bc.in_hypothesis);
  EXPECT_FALSE(bc.violation);
  EXPECT_EQ(bc.theta0, 2);
  EXPECT_EQ(bc.strength, 10u);
}
