#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schemekit::exact {

// Dense univariate polynomial over a field-like coefficient type T, stored
// with ascending degree. The zero polynomial has no coefficients; otherwise
// the leading coefficient is nonzero.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<T> coefficients) : c_(coefficients) { trim(); }

  static Polynomial constant(const T& value) { return Polynomial(std::vector<T>{value}); }
  static Polynomial monomial(const T& value, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = value;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(T(1), 1); }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coefficients() const { return c_; }

  // Coefficient of x^i; zero beyond the degree.
  T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Euclidean division; throws on division by the zero polynomial.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<T> rem = c_;
    if (degree() < divisor.degree()) return {Polynomial{}, *this};
    std::vector<T> quo(c_.size() - divisor.c_.size() + 1, T(0));
    const T lead_inv = T(1) / divisor.leading();
    for (long i = static_cast<long>(quo.size()) - 1; i >= 0; --i) {
      const std::size_t top = static_cast<std::size_t>(i) + divisor.c_.size() - 1;
      T factor = rem[top] * lead_inv;
      quo[static_cast<std::size_t>(i)] = factor;
      if (factor == T(0)) continue;
      for (std::size_t j = 0; j < divisor.c_.size(); ++j)
        rem[static_cast<std::size_t>(i) + j] -= factor * divisor.c_[j];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return a.divmod(b).second; }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return a.divmod(b).first; }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1, T(0));
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    return *this * (T(1) / leading());
  }

  // p(s*x)
  Polynomial scale_argument(const T& s) const {
    std::vector<T> c = c_;
    T power(1);
    for (auto& v : c) {
      v *= power;
      power *= s;
    }
    return Polynomial(std::move(c));
  }

  // Composition p(q(x)).
  Polynomial compose(const Polynomial& q) const {
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
      T v = c_[static_cast<std::size_t>(i)];
      if (v == T(0)) continue;
      const bool negative = v < T(0);
      if (negative) v = -v;
      if (!first)
        out << (negative ? " - " : " + ");
      else if (negative)
        out << "-";
      first = false;
      if (i == 0) {
        out << format(v);
      } else {
        if (!(v == T(1))) out << format(v) << "*";
        out << var;
        if (i > 1) out << "^" << i;
      }
    }
    return out.str();
  }

 private:
  static std::string format(const T& v) {
    std::ostringstream s;
    s << v;
    return s.str();
  }
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace schemekit::exact
