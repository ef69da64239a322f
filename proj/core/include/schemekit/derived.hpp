#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "schemekit/designs.hpp"

namespace schemekit::derived {

using designs::StrengthReport;
using exact::Rational;
using exact::Scalar;
using qpoly::QPolyOrdering;
using scheme::KreinTensor;
using scheme::SchemeCore;

// sum_j q_h(j) p_{i,j}^i == k_i q_h(i)^2 / m_h for all 0 <= h, i <= d.
bool dual_intersection_identity(const SchemeCore& sc);

struct Angle {
  Scalar value;     // (theta0 theta_j - theta_i^2) / (theta0^2 - theta_i^2)
  long multiplicity;  // p_{i,j}^i
  std::size_t relation;
};

struct DerivedDesign {
  std::size_t i = 0;
  Rational theta0;  // m
  Scalar thetai;    // q_1(i)
  std::vector<Angle> angles;
  long size = 0;  // k_i
};

// Throws Error(SelfClass) for i = 0, Error(AntipodalClass) if
// theta_i = -theta0, Error(RepeatedRows) if theta_i = theta0.
DerivedDesign derived_design(const SchemeCore& sc, const QPolyOrdering& ord, std::size_t i);

// (1/k_i) sum_j angle_j^h p_{i,j}^i.
Scalar derived_moment(const DerivedDesign& dd, std::size_t h);
// The same quantity through the binomial expansion with f_{n,l} and
// v_l*(theta_i)^2 / v_l*(theta0); requires h <= d.
Scalar derived_moment_expansion(const DerivedDesign& dd, const QPolyOrdering& ord, std::size_t h);

// Part s - 1 of the derived-design lemma: whether every derived design of
// class i is an s-design in S^{theta0-2}, for s in 2..5. Throws
// Error(HypothesisUnmet) if d < 5 or, for s >= 3, the embedding is not a
// 2(s-1)-design.
bool derived_predicates(const QPolyOrdering& ord, const Scalar& thetai, std::size_t s);

// Throws Error(DegenerateSphere) if theta0 < 3.
StrengthReport derived_strength_by_moments(const DerivedDesign& dd, std::size_t t_max);

// Some relation order making (p_{1,j}^k) tridiagonal with positive
// off-diagonals; perm[i] is the original relation label of the i-th class.
std::optional<std::vector<std::size_t>> ppolynomial_ordering(const SchemeCore& sc);
bool is_ppolynomial(const SchemeCore& sc);

struct BoundReport {
  bool p_polynomial = false;
  bool relations_in_order = false;  // the P-ordering is the given labeling
  Rational theta0;
  bool in_hypothesis = false;  // P- and Q-polynomial with theta0 >= 3
  std::size_t strength = 0;    // moment route, t_max = 2d
  bool violation = false;      // in hypothesis and strength > 8
  std::size_t d_star = 0;      // #{1 <= j <= d : theta_j != -theta0}
  long dgs_derived_strength = 0;  // t + 1 - d*, informational
};
BoundReport pq_strength_bound_check(const SchemeCore& sc, const QPolyOrdering& ord);

}  // namespace schemekit::derived
