// Seeded property suite: each registered invariant runs as its own test, and a
// few invariants are re-checked here against independent formulations.
#include <random>

#include "common.hpp"
#include "schemekit/catalan.hpp"
#include "verify.hpp"

using namespace schemekit;
using namespace schemekit::catalan;
using namespace testing_util;

class VerifyProperty : public ::testing::TestWithParam<std::string> {};

TEST_P(VerifyProperty, Passes) {
  cli::VerifyOptions opts;
  opts.random_triples = 60;
  opts.only = {GetParam()};
  const auto results = cli::run_verify(opts);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_TRUE(results[0].pass) << results[0].detail;
}

INSTANTIATE_TEST_SUITE_P(All, VerifyProperty, ::testing::ValuesIn(cli::property_names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& ch : s)
                             if (ch == '-') ch = '_';
                           return s;
                         });

TEST(Verify, UnknownPropertyRejected) {
  cli::VerifyOptions opts;
  opts.only = {"no-such-property"};
  EXPECT_EQ(kind_of([&] { cli::run_verify(opts); }), ErrorKind::ParseError);
}

TEST(Verify, DeterministicBySeed) {
  cli::VerifyOptions opts;
  opts.random_triples = 20;
  opts.only = {"recover-roundtrip", "catalan-oracle"};
  const auto a = cli::run_verify(opts);
  const auto b = cli::run_verify(opts);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].pass, b[i].pass);
    EXPECT_EQ(a[i].detail, b[i].detail);
  }
}

TEST(Properties, CatalanMatrixInvariants) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const auto w = random_weights(rng, 1 + trial % 5);
    validate(w);
    const auto cm = catalan_matrix(w);
    Rational diag = 1;
    for (std::size_t n = 0; n <= w.d; ++n) {
      if (n > 0) diag *= w.c[n];
      EXPECT_EQ(cm.at(n, n), diag);
    }
    for (std::size_t n = 0; n <= 2 * w.d; ++n)
      for (std::size_t k = n + 1; k <= w.d; ++k) EXPECT_EQ(cm.or_zero(n, k), 0);
    // f_{n+1,k} = c_k f_{n,k-1} + a_k f_{n,k} + b_k f_{n,k+1}
    for (std::size_t n = 0; n + 1 <= 2 * w.d; ++n)
      for (std::size_t k = 0; k <= n + 1 && n + 1 + k <= 2 * w.d; ++k) {
        Rational rhs = w.a[k] * cm.or_zero(n, k);
        if (k > 0) rhs += w.c[k] * cm.or_zero(n, k - 1);
        if (k < w.d) rhs += w.b[k] * cm.or_zero(n, k + 1);
        EXPECT_EQ(cm.at(n + 1, k), rhs) << n + 1 << "," << k;
      }
  }
}

TEST(Properties, SphereWeightsAreTheUniqueDesignWeights) {
  // sphere weights satisfy every closed form, and perturbing any entry breaks
  // the check at the first degree that sees it
  for (long m = 3; m <= 8; ++m) {
    const auto w = sphere_weights(m, 4);
    for (std::size_t t = 1; t <= 7; ++t) EXPECT_TRUE(sphere_weight_check(w, t));
    const auto b = catalan_numbers(w);
    for (std::size_t i = 1; i <= 7; ++i) EXPECT_EQ(b[i], sphere_moments(m, i) * exact::pow(Rational(m), i));
    auto bumped = w;
    bumped.c[2] += Rational(1, 7);
    bumped.b[2] -= Rational(1, 7);
    EXPECT_TRUE(sphere_weight_check(bumped, 2));
    EXPECT_FALSE(sphere_weight_check(bumped, 4));
  }
}
