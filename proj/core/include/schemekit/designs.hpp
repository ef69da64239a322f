#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "schemekit/catalan.hpp"
#include "schemekit/qpoly.hpp"
#include "schemekit/scheme.hpp"

namespace schemekit::designs {

using exact::Rational;
using exact::Scalar;
using qpoly::QPolyOrdering;
using scheme::KreinTensor;
using scheme::SchemeCore;

// Gram cosines of the embedding x -> sqrt(n/m) E e_x: the cosine between
// points in relation j is q(j)/m and occurs k_j times per point.
struct Embedding {
  std::size_t n = 0;
  std::size_t d = 0;
  Rational m;
  std::vector<Scalar> cosines;      // j = 0..d, cosines[0] = 1
  std::vector<long> multiplicities;  // k_j
};

// Throws Error(RepeatedRows) if some cosine with j != 0 equals 1.
Embedding embed(const SchemeCore& sc, const QPolyOrdering& ord);
Embedding embed_idempotent(const SchemeCore& sc, std::size_t idempotent);

Scalar moment(const Embedding& e, std::size_t i);

enum class Route { MomentCriterion, KreinCriterion };
std::string to_string(Route r);

// One condition per degree: for the moment route the i-th moment against the
// sphere value; for the Krein route the weight newly constrained at that
// degree (a_mu* = 0 at 2mu+1, c_mu* = m mu/(m+2mu-2) at 2mu).
struct Residual {
  std::size_t degree = 0;
  std::string quantity;
  Scalar value;
  Scalar target;
  bool pass = false;
};

struct StrengthReport {
  std::size_t t = 0;  // largest t <= t_max with all degrees 1..t passing
  std::size_t t_max = 0;
  Route route = Route::MomentCriterion;
  std::vector<Residual> residuals;  // degrees 1..max(t_max, probe)
  // Largest t <= probe with all degrees 1..t passing; equal to t when no
  // probe past t_max was requested.
  std::size_t probe_t = 0;
};

// Weight triple (a*, b*, c*, m) of a Q-polynomial ordering.
catalan::WeightTriple weight_triple(const QPolyOrdering& ord);

StrengthReport strength_by_moments(const Embedding& e, std::size_t t_max, std::size_t probe = 0);
StrengthReport strength_by_krein(const QPolyOrdering& ord, std::size_t t_max, std::size_t probe = 0);

// moment(embed(sc, ord), i) == f_{i,0}/m^i and, for i <= 6, f_{i,0} equals
// the nested sum over (l_1..l_{i-1}) in {0..d}^{i-1} of
// q_{1,0}^{l_1} q_{1,l_1}^{l_2} .. q_{1,l_{i-1}}^0 under the ordering.
bool krein_moment_identity(const SchemeCore& sc, const KreinTensor& kt, const QPolyOrdering& ord, std::size_t i);

}  // namespace schemekit::designs
