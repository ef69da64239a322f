#include "common.hpp"

using namespace schemekit;
using namespace schemekit::exact;
using namespace testing_util;

namespace {

// direct product K3 x K4: relation = 2*[first coords differ] + [second differ]
RelationPartition k3_times_k4() {
  RelationPartition rp;
  rp.n = 12;
  rp.d = 3;
  rp.rel.resize(144);
  for (std::size_t x = 0; x < 12; ++x)
    for (std::size_t y = 0; y < 12; ++y) rp.rel[x * 12 + y] = 2 * (x / 4 != y / 4) + (x % 4 != y % 4);
  return rp;
}

}  // namespace

TEST(ValidateScheme, CompleteGraph) {
  const auto sc = validate_scheme(generators::complete(4));
  EXPECT_EQ(sc.d, 1u);
  EXPECT_EQ(sc.valencies, (std::vector<long>{1, 3}));
  EXPECT_EQ(sc.multiplicities, (std::vector<long>{1, 3}));
}

TEST(ValidateScheme, Petersen) {
  const auto sc = validate_scheme(generators::petersen());
  EXPECT_EQ(sc.valencies, (std::vector<long>{1, 3, 6}));
  EXPECT_EQ(sc.multiplicities, (std::vector<long>{1, 5, 4}));
  // spectrum 3, 1, -2 of the Petersen graph
  EXPECT_EQ(sc.eigenvalue(1, 0), Scalar(3));
  EXPECT_EQ(sc.eigenvalue(1, 1), Scalar(1));
  EXPECT_EQ(sc.eigenvalue(1, 2), Scalar(-2));
  EXPECT_EQ(sc.field, nullptr);
}

TEST(ValidateScheme, StructuralInvariants) {
  for (const auto& spec : generators::corpus()) {
    SCOPED_TRACE(spec.label());
    const auto sc = validate_scheme(generators::generate(spec));
    long ksum = 0, msum = 0;
    for (auto k : sc.valencies) ksum += k;
    for (auto m : sc.multiplicities) msum += m;
    EXPECT_EQ(ksum, static_cast<long>(sc.n));
    EXPECT_EQ(msum, static_cast<long>(sc.n));
    // PQ = nI
    for (std::size_t i = 0; i <= sc.d; ++i)
      for (std::size_t j = 0; j <= sc.d; ++j) {
        Scalar acc(0);
        for (std::size_t l = 0; l <= sc.d; ++l) acc += sc.P(i, l) * sc.Q(l, j);
        EXPECT_EQ(acc, Scalar(i == j ? static_cast<long>(sc.n) : 0L));
      }
    for (std::size_t j = 0; j <= sc.d; ++j) EXPECT_EQ(rank(sc.idempotents[j]), static_cast<std::size_t>(sc.multiplicities[j]));
  }
}

TEST(ValidateScheme, EigenvaluesActOnIdempotents) {
  const auto sc = validate_scheme(generators::hamming(3, 2));
  for (std::size_t i = 0; i <= sc.d; ++i) {
    const auto a = adjacency_matrix(sc.relations, i);
    ScalarMatrix as(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) as(r, c) = a(r, c);
    for (std::size_t j = 0; j <= sc.d; ++j) EXPECT_EQ(as * sc.idempotents[j], sc.idempotents[j] * sc.eigenvalue(i, j));
  }
}

TEST(ValidateScheme, AsymmetricPairRejected) {
  auto rp = generators::complete(3);
  rp.d = 2;
  rp.rel[0 * 3 + 1] = 2;  // (0,1) in R_2 but (1,0) in R_1
  rp.rel[1 * 3 + 2] = 2;
  rp.rel[2 * 3 + 1] = 2;
  EXPECT_EQ(kind_of([&] { validate_scheme(rp); }), ErrorKind::NotAScheme);
  EXPECT_EQ(detail_of([&] { validate_scheme(rp); }).rfind("symmetry", 0), 0u);
}

TEST(ValidateScheme, NotClosedRejected) {
  // path on 3 vertices: distance partition is not a scheme
  RelationPartition rp{3, 2, {0, 1, 2, 1, 0, 1, 2, 1, 0}};
  EXPECT_EQ(kind_of([&] { validate_scheme(rp); }), ErrorKind::NotAScheme);
}

TEST(IntersectionNumbers, B0IsIdentity) {
  const auto sc = validate_scheme(generators::petersen());
  const auto b0 = intersection_numbers(sc, 0);
  for (std::size_t r = 0; r <= sc.d; ++r)
    for (std::size_t c = 0; c <= sc.d; ++c) EXPECT_EQ(b0(r, c), r == c ? 1 : 0);
}

TEST(IntersectionNumbers, PetersenRowSums) {
  const auto sc = validate_scheme(generators::petersen());
  const auto b1 = intersection_numbers(sc, 1);
  for (std::size_t r = 0; r <= sc.d; ++r) {
    long s = 0;
    for (std::size_t c = 0; c <= sc.d; ++c) s += b1(r, c);
    EXPECT_EQ(s, 3);
  }
  EXPECT_EQ(kind_of([&] { intersection_numbers(sc, 3); }), ErrorKind::IndexOutOfRange);
}

TEST(IntersectionNumbers, PentagonCount) {
  const auto sc = validate_scheme(generators::cycle(5));
  EXPECT_EQ(sc.intersection(1, 1, 2), 1);
  EXPECT_EQ(sc.intersection(1, 1, 1), 0);
  EXPECT_EQ(sc.intersection(1, 2, 1), 1);
}

TEST(Krein, AxiomsOnCorpus) {
  for (const auto& spec : generators::corpus()) {
    SCOPED_TRACE(spec.label());
    const auto sc = validate_scheme(generators::generate(spec));
    const auto kt = krein_parameters(sc);
    const std::size_t d = sc.d;
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t j = 0; j <= d; ++j)
        for (std::size_t k = 0; k <= d; ++k) {
          EXPECT_GE(kt(i, j, k).sign(), 0);
          EXPECT_EQ(kt(i, j, k), kt(j, i, k));
          if (j == 0) {
            EXPECT_EQ(kt(i, 0, k), Scalar(i == k ? 1 : 0));
          }
        }
    // Row law over the lower index.
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t k = 0; k <= d; ++k) {
        Scalar s(0);
        for (std::size_t j = 0; j <= d; ++j) s += kt(i, j, k);
        EXPECT_EQ(s, Scalar(sc.multiplicities[i]));
      }
  }
}

TEST(Krein, RowLawIsOverLowerIndex) {
  // the sum over the upper index is not m_1 in general
  const auto a = analyse("icosahedron");
  const auto& o = a.orderings.front();
  const auto kt = relabel(a.kt, o.perm);
  Scalar upper(0);
  for (std::size_t k = 0; k <= 3; ++k) upper += kt(1, 1, k);
  EXPECT_NE(upper, Scalar(3));
}

TEST(Krein, PentagonSelfDual) {
  const auto sc = validate_scheme(generators::cycle(5));
  const auto kt = krein_parameters(sc);
  for (std::size_t i = 0; i <= 2; ++i)
    for (std::size_t j = 0; j <= 2; ++j)
      for (std::size_t k = 0; k <= 2; ++k) EXPECT_EQ(kt(i, j, k), Scalar(sc.intersection(i, j, k)));
}

TEST(Krein, PetersenNotThreeDesign) {
  const auto a = analyse("petersen");
  EXPECT_NE(a.kt(1, 1, 1), Scalar(0));
  EXPECT_EQ(a.kt(1, 1, 1), Scalar(make_rational(20, 9)));
}

TEST(DualEigen, Consistency) {
  for (const char* fam : {"petersen", "hamming"}) {
    const auto sc = validate_scheme(generators::generate(generators::parse_spec(fam, fam == std::string("hamming") ? "d=3,q=2" : "")));
    for (bool ok : dual_eigen_consistency(sc)) EXPECT_TRUE(ok);
  }
}

TEST(Relabel, IdempotentsPermuted) {
  const auto sc = validate_scheme(generators::petersen());
  const std::vector<std::size_t> perm{0, 2, 1};
  const auto re = relabel_idempotents(sc, perm);
  EXPECT_EQ(re.multiplicities, (std::vector<long>{1, 4, 5}));
  EXPECT_EQ(re.idempotents[1], sc.idempotents[2]);
  const auto kt = relabel(krein_parameters(sc), perm);
  EXPECT_EQ(kt.q, krein_parameters(re).q);
}

TEST(ValidateScheme, ImprimitiveProductScheme) {
  const auto sc = validate_scheme(k3_times_k4());
  EXPECT_EQ(sc.valencies, (std::vector<long>{1, 3, 2, 6}));
  EXPECT_EQ(sc.multiplicities.size(), 4u);
  EXPECT_FALSE(derived::is_ppolynomial(sc));
}
