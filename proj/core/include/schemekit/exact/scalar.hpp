#pragma once

#include <memory>
#include <mutex>
#include <ostream>
#include <string>

#include "schemekit/exact/real_roots.hpp"

namespace schemekit::exact {

// Q(alpha) for a monic irreducible integer polynomial and one distinguished
// real root alpha, so that every element has a well-defined sign. The
// isolating interval is refined lazily under a mutex; everything else is
// immutable.
class NumberField {
 public:
  NumberField(QPolynomial minpoly, RootInterval root);

  const QPolynomial& minpoly() const { return minpoly_; }
  long degree() const { return minpoly_.degree(); }

  QPolynomial reduce(const QPolynomial& p) const { return p % minpoly_; }
  QPolynomial inverse(const QPolynomial& p) const;

  // Sign of p(alpha) for p already reduced; p must be nonzero.
  int sign(const QPolynomial& p) const;

  // Current isolating interval, refined to width <= 2^-bits.
  RootInterval interval(unsigned bits) const;
  double approx() const;

  std::string describe() const;

 private:
  QPolynomial minpoly_;
  mutable std::mutex mutex_;
  mutable RootInterval root_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Exact real scalar: a rational, or an element of a real number field in the
// power basis of its generator. Values that reduce to constants are always
// stored as plain rationals, so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q) : q_(q) {}  // NOLINT(google-explicit-constructor)
  Scalar(FieldPtr field, const QPolynomial& value);

  static Scalar generator(const FieldPtr& field);

  bool is_rational() const { return field_ == nullptr; }
  // Throws Error(NotRational) for irrational values.
  const Rational& to_rational() const;
  const FieldPtr& field() const { return field_; }
  // Power-basis representation (a constant polynomial for rationals).
  QPolynomial representation() const;

  bool is_zero() const { return field_ == nullptr && sgn(q_) == 0; }
  int sign() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return (a - b).sign() > 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return (a - b).sign() <= 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return (a - b).sign() >= 0; }

  double to_double() const;
  // Rationals as "p" or "p/q"; field elements as a polynomial in "a".
  std::string to_string() const;

 private:
  void normalize();
  FieldPtr common_field(const Scalar& o) const;

  FieldPtr field_;
  Rational q_;
  // Reduced representation when field_ is set; degree >= 1.
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& out, const Scalar& s);

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline int sign(const Scalar& s) { return s.sign(); }
Scalar pow(const Scalar& base, unsigned exponent);

using ScalarMatrix = Matrix<Scalar>;
using RationalMatrix = Matrix<Rational>;

}  // namespace schemekit::exact
