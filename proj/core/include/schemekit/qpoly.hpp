#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "schemekit/scheme.hpp"

namespace schemekit::qpoly {

using exact::Rational;
using scheme::KreinTensor;
using scheme::SchemeCore;

// perm[i] is the canonical index of the i-th idempotent in the ordering.
struct QPolyOrdering {
  std::vector<std::size_t> perm;
  std::vector<Rational> a_star;  // a_i* = q_{1,i}^i
  std::vector<Rational> b_star;  // b_i* = q_{1,i+1}^i
  std::vector<Rational> c_star;  // c_i* = q_{1,i-1}^i
  Rational m;                    // multiplicity of E_{perm[1]}
};

// True iff under perm: q_{i,j}^k = 0 whenever one index exceeds the sum of
// the other two, and q_{i,j}^{i+j} > 0 whenever i + j <= d.
bool is_qpolynomial(const KreinTensor& kt, std::span<const std::size_t> perm);

// All Q-polynomial orderings, one greedy attempt per choice of E_1.
std::vector<QPolyOrdering> find_qpoly_orderings(const KreinTensor& kt, const SchemeCore& sc);

// Reads the three diagonals of (q_{1,j}^k) under perm. Throws
// Error(NotTridiagonal) if an entry off the tridiagonal is nonzero or an
// off-diagonal that must be positive is not, Error(NotRational) if a diagonal
// entry is irrational.
QPolyOrdering abc_sequences(const KreinTensor& kt, std::span<const std::size_t> perm);

}  // namespace schemekit::qpoly
