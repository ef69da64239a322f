#include "schemekit/exact/real_roots.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "schemekit/error.hpp"

namespace schemekit::exact {

namespace {

int sign_at(const QPolynomial& p, const Rational& x) { return sgn(p(x)); }

std::vector<QPolynomial> sturm_sequence(const QPolynomial& p) {
  std::vector<QPolynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    QPolynomial r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sign_changes(const std::vector<QPolynomial>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Strict upper bound on |root| (Cauchy).
Rational root_bound(const QPolynomial& p) {
  Rational best(0);
  for (long i = 0; i < p.degree(); ++i) {
    Rational r = abs(p[static_cast<std::size_t>(i)] / p.leading());
    if (r > best) best = r;
  }
  return best + 1;
}

}  // namespace

bool is_squarefree(const QPolynomial& p) {
  if (p.degree() < 1) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

std::vector<RootInterval> isolate_real_roots(const QPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;
  const auto seq = sturm_sequence(p);
  const Rational bound = root_bound(p);

  // Roots in (a, b] counted as V(a) - V(b).
  std::function<void(const Rational&, const Rational&, int, int)> split =
      [&](const Rational& a, const Rational& b, int va, int vb) {
        const int count = va - vb;
        if (count <= 0) return;
        if (count == 1) {
          if (sign_at(p, b) == 0) {
            out.push_back({b, b});
          } else {
            out.push_back({a, b});
          }
          return;
        }
        const Rational mid = (a + b) / 2;
        const int vm = sign_changes(seq, mid);
        split(a, mid, va, vm);
        split(mid, b, vm, vb);
      };
  const Rational lo = -bound;
  split(lo, bound, sign_changes(seq, lo), sign_changes(seq, bound));
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.hi < y.hi; });
  return out;
}

void refine_root(const QPolynomial& p, RootInterval& root, const Rational& width) {
  if (root.exact()) return;
  int s_hi = sign_at(p, root.hi);
  while (root.hi - root.lo > width) {
    const Rational mid = (root.lo + root.hi) / 2;
    const int s_mid = sign_at(p, mid);
    if (s_mid == 0) {
      root = {mid, mid};
      return;
    }
    if (s_mid != s_hi) {
      root.lo = mid;
    } else {
      root.hi = mid;
      s_hi = s_mid;
    }
  }
}

namespace {

struct Interval {
  Rational lo;
  Rational hi;
};

Interval mul(const Interval& a, const Interval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

// Coefficients of prod (x - r) over the given roots, as intervals.
std::vector<Interval> interval_product(const std::vector<const RootInterval*>& roots) {
  std::vector<Interval> poly{{Rational(1), Rational(1)}};
  for (const RootInterval* r : roots) {
    const Interval neg{-r->hi, -r->lo};
    std::vector<Interval> next(poly.size() + 1, Interval{Rational(0), Rational(0)});
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1].lo += poly[i].lo;
      next[i + 1].hi += poly[i].hi;
      const Interval t = mul(poly[i], neg);
      next[i].lo += t.lo;
      next[i].hi += t.hi;
    }
    poly = std::move(next);
  }
  return poly;
}

enum class Rounding { Ok, NoInteger, TooWide };

Rounding round_to_integers(const std::vector<Interval>& coeffs, QPolynomial& out) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& iv : coeffs) {
    if (iv.hi - iv.lo >= Rational(1, 2)) return Rounding::TooWide;
    // Smallest integer >= lo.
    Integer z = floor(iv.lo);
    if (Rational(z) < iv.lo) z += 1;
    if (Rational(z) > iv.hi) return Rounding::NoInteger;
    c.emplace_back(z);
  }
  out = QPolynomial(std::move(c));
  return Rounding::Ok;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<IrreducibleFactor> factor_real_rooted(const QPolynomial& p) {
  if (p.degree() < 1 || p.leading() != 1) throw std::invalid_argument("factor_real_rooted: need monic polynomial");
  for (const auto& c : p.coefficients())
    if (!is_integer(c)) throw std::invalid_argument("factor_real_rooted: need integer coefficients");
  if (!is_squarefree(p)) throw std::invalid_argument("factor_real_rooted: need squarefree polynomial");

  std::vector<RootInterval> roots = isolate_real_roots(p);
  if (static_cast<long>(roots.size()) != p.degree())
    throw Error(ErrorKind::NonIntegerSpectrum, "characteristic polynomial has non-real roots");

  std::vector<IrreducibleFactor> factors;
  std::vector<RootInterval> irrational;
  QPolynomial rest = p;
  for (auto& r : roots) {
    refine_root(p, r, Rational(1, 4));
    if (!r.exact()) {
      const Integer z = floor(r.hi);
      if (Rational(z) > r.lo && sgn(p(Rational(z))) == 0) r = {Rational(z), Rational(z)};
    }
    if (r.exact()) {
      QPolynomial lin{Rational(-r.lo), Rational(1)};
      factors.push_back({lin, {r}});
      rest = rest / lin;
    } else {
      irrational.push_back(r);
    }
  }

  Rational width(1, 1 << 20);
  for (auto& r : irrational) refine_root(p, r, width);

  while (!irrational.empty()) {
    bool found = false;
    const std::size_t n = irrational.size();
    for (std::size_t size = 2; size <= n && !found; ++size) {
      // Subsets that contain irrational[0]; idx ranges over the others.
      std::vector<std::size_t> idx(size - 1);
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      do {
        std::vector<const RootInterval*> chosen{&irrational[0]};
        for (auto i : idx) chosen.push_back(&irrational[i + 1]);
        QPolynomial candidate;
        Rounding rounding;
        while ((rounding = round_to_integers(interval_product(chosen), candidate)) == Rounding::TooWide) {
          width /= 256;
          for (auto& r : irrational) refine_root(p, r, width);
        }
        if (rounding != Rounding::Ok) continue;
        auto [quo, rem] = rest.divmod(candidate);
        if (!rem.is_zero()) continue;
        std::vector<bool> take(n, false);
        take[0] = true;
        for (auto i : idx) take[i + 1] = true;
        IrreducibleFactor f{candidate, {}};
        std::vector<RootInterval> remaining;
        for (std::size_t i = 0; i < n; ++i) (take[i] ? f.roots : remaining).push_back(irrational[i]);
        factors.push_back(std::move(f));
        irrational = std::move(remaining);
        rest = quo;
        found = true;
        break;
      } while (next_combination(idx, n - 1));
    }
    if (!found) throw std::logic_error("factor_real_rooted: no factor found");
  }
  return factors;
}

QPolynomial characteristic_polynomial(const Matrix<Rational>& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic_polynomial: square matrix required");
  const std::size_t n = m.rows();
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  Matrix<Rational> mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
  }
  return QPolynomial(std::move(c));
}

}  // namespace schemekit::exact
