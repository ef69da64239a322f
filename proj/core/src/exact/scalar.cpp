#include "schemekit/exact/scalar.hpp"

#include <cmath>
#include <sstream>

#include "schemekit/error.hpp"

namespace schemekit::exact {

NumberField::NumberField(QPolynomial minpoly, RootInterval root) : minpoly_(std::move(minpoly)), root_(std::move(root)) {
  if (minpoly_.degree() < 2) throw std::invalid_argument("NumberField: generator must be irrational");
  if (root_.exact()) throw std::invalid_argument("NumberField: exact root is rational");
}

QPolynomial NumberField::inverse(const QPolynomial& p) const {
  // Extended Euclid: s*p + t*g = 1.
  QPolynomial r0 = minpoly_, r1 = p;
  QPolynomial s0, s1 = QPolynomial::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    QPolynomial s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw Error(ErrorKind::DivisionByZero, "element is not invertible");
  return reduce(s0 * (Rational(1) / r0.leading()));
}

RootInterval NumberField::interval(unsigned bits) const {
  std::lock_guard lock(mutex_);
  Rational width(1);
  mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), bits);
  refine_root(minpoly_, root_, width);
  return root_;
}

namespace {

struct Interval {
  Rational lo, hi;
};

Interval horner(const QPolynomial& p, const RootInterval& x) {
  Interval acc{Rational(0), Rational(0)};
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    Rational v[4] = {acc.lo * x.lo, acc.lo * x.hi, acc.hi * x.lo, acc.hi * x.hi};
    acc.lo = *std::min_element(v, v + 4) + *it;
    acc.hi = *std::max_element(v, v + 4) + *it;
  }
  return acc;
}

}  // namespace

int NumberField::sign(const QPolynomial& p) const {
  if (p.is_zero()) return 0;
  if (p.degree() == 0) return sgn(p[0]);
  for (unsigned bits = 32;; bits += 32) {
    const Interval v = horner(p, interval(bits));
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
  }
}

double NumberField::approx() const {
  const RootInterval r = interval(64);
  const Rational mid = (r.lo + r.hi) / 2;
  return mid.get_d();
}

std::string NumberField::describe() const {
  std::ostringstream out;
  out << "a = root of " << minpoly_.to_string("x") << " near " << approx();
  return out.str();
}

Scalar::Scalar(FieldPtr field, const QPolynomial& value) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("Scalar: null field");
  const QPolynomial r = field_->reduce(value);
  coeffs_ = r.coefficients();
  normalize();
}

Scalar Scalar::generator(const FieldPtr& field) { return Scalar(field, QPolynomial::x()); }

void Scalar::normalize() {
  if (!field_) return;
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  if (coeffs_.size() <= 1) {
    q_ = coeffs_.empty() ? Rational(0) : coeffs_[0];
    coeffs_.clear();
    field_.reset();
  }
}

const Rational& Scalar::to_rational() const {
  if (field_) throw Error(ErrorKind::NotRational, to_string());
  return q_;
}

QPolynomial Scalar::representation() const {
  if (field_) return QPolynomial(coeffs_);
  return QPolynomial::constant(q_);
}

int Scalar::sign() const {
  if (!field_) return sgn(q_);
  return field_->sign(QPolynomial(coeffs_));
}

FieldPtr Scalar::common_field(const Scalar& o) const {
  if (!field_) return o.field_;
  if (!o.field_ || o.field_ == field_) return field_;
  throw Error(ErrorKind::FieldMismatch, "operands live in different number fields");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!field_ && !o.field_) {
    q_ += o.q_;
    return *this;
  }
  FieldPtr f = common_field(o);
  *this = Scalar(f, representation() + o.representation());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (!field_ && !o.field_) {
    q_ -= o.q_;
    return *this;
  }
  FieldPtr f = common_field(o);
  *this = Scalar(f, representation() - o.representation());
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!field_ && !o.field_) {
    q_ *= o.q_;
    return *this;
  }
  FieldPtr f = common_field(o);
  if (!o.field_) {
    if (sgn(o.q_) == 0) return *this = Scalar(0);
    for (auto& c : coeffs_) c *= o.q_;
    return *this;
  }
  if (!field_) {
    if (sgn(q_) == 0) return *this;
    Scalar r = o;
    for (auto& c : r.coeffs_) c *= q_;
    return *this = std::move(r);
  }
  *this = Scalar(f, representation() * o.representation());
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (!field_) return Scalar(Rational(1) / q_);
  return Scalar(field_, field_->inverse(QPolynomial(coeffs_)));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (!field_ && !o.field_) {
    if (sgn(o.q_) == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
    q_ /= o.q_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.q_ = -r.q_;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.field_ && !b.field_) return a.q_ == b.q_;
  if (!a.field_ || !b.field_) return false;
  if (a.field_ != b.field_) throw Error(ErrorKind::FieldMismatch, "comparing elements of different fields");
  return a.coeffs_ == b.coeffs_;
}

double Scalar::to_double() const {
  if (!field_) return q_.get_d();
  const double a = field_->approx();
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * a + it->get_d();
  return acc;
}

std::string Scalar::to_string() const {
  if (!field_) return exact::to_string(q_);
  std::string out;
  for (long i = static_cast<long>(coeffs_.size()) - 1; i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    if (!out.empty()) out += sgn(c) > 0 ? " + " : " - ";
    else if (sgn(c) < 0) out += "-";
    const Rational mag = abs(c);
    if (i == 0) {
      out += exact::to_string(mag);
      continue;
    }
    if (mag != 1) out += exact::to_string(mag) + "*";
    out += "a";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::ostream& operator<<(std::ostream& out, const Scalar& s) { return out << s.to_string(); }

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar result(1);
  Scalar b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace schemekit::exact
