#pragma once

#include <vector>

#include "schemekit/exact/matrix.hpp"
#include "schemekit/exact/polynomial.hpp"
#include "schemekit/exact/rational.hpp"

namespace schemekit::exact {

using QPolynomial = Polynomial<Rational>;

// A real root located either exactly (lo == hi) or as the unique root of the
// polynomial in the open interval (lo, hi), with p(hi) != 0.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

bool is_squarefree(const QPolynomial& p);

// Distinct real roots of a squarefree polynomial, ascending, found by Sturm
// sequences and bisection.
std::vector<RootInterval> isolate_real_roots(const QPolynomial& p);

// Shrinks the interval until hi - lo <= width (or the root turns out exact).
void refine_root(const QPolynomial& p, RootInterval& root, const Rational& width);

struct IrreducibleFactor {
  QPolynomial poly;                 // monic, integer coefficients
  std::vector<RootInterval> roots;  // ascending
};

// Factors a monic squarefree integer polynomial whose roots are all real into
// monic irreducible factors over Q. Candidate factors come from products of
// isolated roots evaluated in interval arithmetic and are confirmed by exact
// division, so the result never depends on floating point.
std::vector<IrreducibleFactor> factor_real_rooted(const QPolynomial& p);

// det(xI - M) by the Faddeev-LeVerrier recurrence.
QPolynomial characteristic_polynomial(const Matrix<Rational>& m);

}  // namespace schemekit::exact
