#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "schemekit/exact.hpp"

namespace schemekit::catalan {

using exact::Rational;
using Poly = exact::QPolynomial;

// Sequences a*, b*, c* of length d + 1 with first multiplicity m.
struct WeightTriple {
  std::size_t d = 0;
  std::vector<Rational> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
  Rational m;
};

// Throws Error(InvalidWeights) naming the first violated condition.
void validate(const WeightTriple& w);

// b_i* = m - a_i* - c_i*, then validate.
WeightTriple make_weights(std::vector<Rational> a, std::vector<Rational> c, const Rational& m);

// a* = 0, c_j* = mj/(m+2j-2) for 1 <= j < d, closed off by c_d* = m.
WeightTriple sphere_weights(const Rational& m, std::size_t d);

// A random valid triple: m in [2, 12] with small denominators, a_i, c_i
// drawn below m so that every b_i* (i < d) and c_i* (i >= 1) is positive.
WeightTriple random_weights(std::mt19937_64& rng, std::size_t d);

// f_{n,k} on V = {0 <= k <= n, n + k <= 2d}.
class CatalanMatrix {
 public:
  CatalanMatrix() = default;
  explicit CatalanMatrix(std::size_t d);

  std::size_t d() const { return d_; }
  bool contains(std::size_t n, std::size_t k) const { return k <= n && n + k <= 2 * d_; }
  // Throws Error(IndexOutOfRange) outside V.
  const Rational& at(std::size_t n, std::size_t k) const;
  Rational& at(std::size_t n, std::size_t k);
  // Zero outside V.
  Rational or_zero(std::size_t n, std::size_t k) const { return contains(n, k) ? f_[n * (d_ + 1) + k] : Rational(0); }

  friend bool operator==(const CatalanMatrix&, const CatalanMatrix&) = default;

 private:
  std::size_t d_ = 0;
  std::vector<Rational> f_;  // (2d + 1) x (d + 1)
};

CatalanMatrix catalan_matrix(const WeightTriple& w);

// Sum of weights of all paths (0,0) -> (n,k) in V. Edges: up into height y
// weigh c_y*, flat at height y weighs a_y*, down from y+1 to y weighs b_y*.
Rational path_weight_enumeration(const WeightTriple& w, std::size_t n, std::size_t k);
// One traversal of every path from (0,0), accumulating each prefix.
CatalanMatrix path_weight_table(const WeightTriple& w);

std::vector<Rational> catalan_numbers(const WeightTriple& w);  // B_0..B_{2d}

struct PartialWeights {
  std::vector<Rational> a;  // a_0*.. as far as determined
  std::vector<Rational> c;  // c_0* (= 0), c_1*, ..
};

// c_n* = f_{n,n}/f_{n-1,n-1} for n <= d and a_n* = f_{n+1,n}/f_{n,n} -
// f_{n,n-1}/f_{n-1,n-1} while f_{n+1,n} lies in V. Throws
// Error(DivisionByZero) on a vanishing diagonal entry.
PartialWeights weights_from_matrix(const CatalanMatrix& cm);

// moments = (B_1, .., B_t). Solves for c_mu* at t = 2mu and a_mu* at
// t = 2mu + 1, with b_i* = m - a_i* - c_i*. Returns a* up to floor((t-1)/2)
// and c* up to ceil((t-1)/2). Throws Error(InconsistentMoments) with the
// failing step when B_1 != 0, B_2 != m, a solved weight is negative or a
// required coefficient f_{mu-1,mu-1} b_{mu-1}* .. b_0* vanishes.
PartialWeights recover_weights(const std::vector<Rational>& moments, const Rational& m);

// (i-1)!!(m-2)!!/(m+i-2)!! for even i, 0 for odd i; (-1)!! = 0!! = 1.
Rational sphere_moments(const Rational& m, std::size_t i);
Rational sphere_catalan_closed_form(const Rational& m, std::size_t n, std::size_t k);
// a_i* = 0 for i <= floor((t-1)/2) and c_j* = mj/(m+2j-2) for
// 1 <= j <= ceil((t-1)/2); false if an index runs past d.
bool sphere_weight_check(const WeightTriple& w, std::size_t t);

std::vector<Poly> orthogonal_polys(const WeightTriple& w);  // v_0*..v_d*
bool expansion_coeffs_check(const WeightTriple& w, std::size_t n);

Poly gegenbauer(const Rational& m, std::size_t k);

struct MonomialExpansion {
  std::vector<Rational> g;  // g_{n,0..n}
  std::vector<Rational> h;  // m^n g_{n,k}
  bool verified = false;    // x^n == sum_k h_{n,k} Q_k(x/m)
};
MonomialExpansion monomial_in_gegenbauer(const Rational& m, std::size_t n);

}  // namespace schemekit::catalan
