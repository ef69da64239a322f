#include "schemekit/catalan.hpp"

#include <string>

#include "schemekit/error.hpp"

namespace schemekit::catalan {

namespace {

using exact::make_rational;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidWeights, what); }

std::string idx(const char* name, std::size_t i) { return std::string(name) + "_" + std::to_string(i) + "*"; }

// f_{n,0} from unvalidated sequences (entries past the end read as 0).
Rational column_zero(const std::vector<Rational>& a, const std::vector<Rational>& b, const std::vector<Rational>& c,
                     std::size_t t) {
  auto get = [](const std::vector<Rational>& v, std::size_t i) { return i < v.size() ? v[i] : Rational(0); };
  const std::size_t height = t / 2 + 1;
  std::vector<Rational> row(height + 1, Rational(0)), next(height + 1);
  row[0] = 1;
  for (std::size_t n = 1; n <= t; ++n) {
    for (std::size_t k = 0; k <= height; ++k) {
      Rational v = get(a, k) * row[k];
      if (k > 0) v += get(c, k) * row[k - 1];
      if (k < height) v += get(b, k) * row[k + 1];
      next[k] = v;
    }
    std::swap(row, next);
  }
  return row[0];
}

// Product of (m + 2r) for r = 0..count-1.
Rational rising_even(const Rational& m, std::size_t count) {
  Rational acc(1);
  for (std::size_t r = 0; r < count; ++r) acc *= m + Rational(2 * static_cast<long>(r));
  return acc;
}

Rational double_factorial(long v) {
  Rational acc(1);
  for (long x = v; x > 1; x -= 2) acc *= x;
  return acc;
}

Rational factorial(std::size_t v) {
  Rational acc(1);
  for (std::size_t x = 2; x <= v; ++x) acc *= static_cast<long>(x);
  return acc;
}

// n! (m-2)!! / ((n-k)!! (m+n+k-2)!!), zero off parity.
Rational g_coefficient(const Rational& m, std::size_t n, std::size_t k) {
  if (k > n || (n - k) % 2 != 0) return 0;
  return factorial(n) / (double_factorial(static_cast<long>(n - k)) * rising_even(m, (n + k) / 2));
}

void dfs(const WeightTriple& w, std::size_t n, std::size_t k, const Rational& weight, std::size_t target_n,
         std::size_t target_k, Rational& hit, CatalanMatrix* table) {
  const std::size_t limit = 2 * w.d;
  if (table) table->at(n, k) += weight;
  if (!table && n == target_n) {
    if (k == target_k) hit += weight;
    return;
  }
  if (n + 1 + (k > 0 ? k - 1 : 0) > limit) return;
  if (k > 0) dfs(w, n + 1, k - 1, weight * w.b[k - 1], target_n, target_k, hit, table);
  if (n + 1 + k <= limit && sgn(w.a[k]) != 0) dfs(w, n + 1, k, weight * w.a[k], target_n, target_k, hit, table);
  if (k + 1 <= w.d && n + 2 + k <= limit) dfs(w, n + 1, k + 1, weight * w.c[k + 1], target_n, target_k, hit, table);
}

}  // namespace

void validate(const WeightTriple& w) {
  const std::size_t D = w.d + 1;
  if (w.d < 1) invalid("d >= 1 required");
  if (w.a.size() != D || w.b.size() != D || w.c.size() != D) invalid("sequences must have length d + 1");
  for (std::size_t i = 0; i < D; ++i) {
    if (sgn(w.a[i]) < 0) invalid(idx("a", i) + " is negative");
    if (sgn(w.b[i]) < 0) invalid(idx("b", i) + " is negative");
    if (sgn(w.c[i]) < 0) invalid(idx("c", i) + " is negative");
    if (w.a[i] + w.b[i] + w.c[i] != w.m) invalid(idx("a", i) + " + " + idx("b", i) + " + " + idx("c", i) + " != m");
  }
  if (sgn(w.a[0]) != 0) invalid("a_0* must be 0");
  if (sgn(w.c[0]) != 0) invalid("c_0* must be 0");
  if (sgn(w.b[w.d]) != 0) invalid("b_d* must be 0");
  if (w.c[1] != 1) invalid("c_1* must be 1");
  for (std::size_t i = 0; i < w.d; ++i)
    if (sgn(w.b[i]) == 0 || sgn(w.c[i + 1]) == 0) invalid(idx("b", i) + " c_" + std::to_string(i + 1) + "* vanishes");
}

WeightTriple make_weights(std::vector<Rational> a, std::vector<Rational> c, const Rational& m) {
  if (a.size() != c.size() || a.size() < 2) invalid("a* and c* must have equal length d + 1 >= 2");
  WeightTriple w;
  w.d = a.size() - 1;
  w.m = m;
  w.b.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) w.b[i] = m - a[i] - c[i];
  w.a = std::move(a);
  w.c = std::move(c);
  validate(w);
  return w;
}

WeightTriple sphere_weights(const Rational& m, std::size_t d) {
  if (d < 1) invalid("d >= 1 required");
  if (m < 2) invalid("m >= 2 required");
  std::vector<Rational> a(d + 1, Rational(0)), c(d + 1, Rational(0));
  for (std::size_t j = 1; j < d; ++j) {
    const Rational jj(static_cast<long>(j));
    c[j] = m * jj / (m + 2 * jj - 2);
  }
  c[d] = m;
  return make_weights(std::move(a), std::move(c), m);
}

WeightTriple random_weights(std::mt19937_64& rng, std::size_t d) {
  if (d < 1) invalid("d >= 1 required");
  std::uniform_int_distribution<long> den_dist(1, 4);
  const long den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(2 * den, 12 * den);
  const Rational m = make_rational(num_dist(rng), den);
  // Positive rational strictly below `bound`, on a grid of 1/12.
  auto below = [&](const Rational& bound, bool allow_zero) {
    const long steps = mpz_class(exact::floor(bound * 12)).get_si();
    std::uniform_int_distribution<long> s(allow_zero ? 0 : 1, std::max<long>(allow_zero ? 0 : 1, steps - 1));
    Rational v = make_rational(s(rng), 12);
    if (v >= bound) v = bound / 2;
    return v;
  };
  std::vector<Rational> a(d + 1, Rational(0)), c(d + 1, Rational(0));
  c[1] = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    if (i > 1) c[i] = below(m, false);
    if (i < d) {
      std::bernoulli_distribution zero(0.3);
      a[i] = zero(rng) ? Rational(0) : below(m - c[i], true);
    } else {
      a[i] = m - c[i];
    }
  }
  return make_weights(std::move(a), std::move(c), m);
}

CatalanMatrix::CatalanMatrix(std::size_t d) : d_(d), f_((2 * d + 1) * (d + 1), Rational(0)) {}

const Rational& CatalanMatrix::at(std::size_t n, std::size_t k) const {
  if (!contains(n, k)) throw Error(ErrorKind::IndexOutOfRange, "(" + std::to_string(n) + "," + std::to_string(k) + ") outside V");
  return f_[n * (d_ + 1) + k];
}

Rational& CatalanMatrix::at(std::size_t n, std::size_t k) {
  if (!contains(n, k)) throw Error(ErrorKind::IndexOutOfRange, "(" + std::to_string(n) + "," + std::to_string(k) + ") outside V");
  return f_[n * (d_ + 1) + k];
}

CatalanMatrix catalan_matrix(const WeightTriple& w) {
  validate(w);
  CatalanMatrix cm(w.d);
  cm.at(0, 0) = 1;
  for (std::size_t n = 1; n <= 2 * w.d; ++n)
    for (std::size_t k = 0; k <= n && n + k <= 2 * w.d; ++k) {
      Rational v = w.a[k] * cm.or_zero(n - 1, k);
      if (k > 0) v += w.c[k] * cm.or_zero(n - 1, k - 1);
      if (k < w.d) v += w.b[k] * cm.or_zero(n - 1, k + 1);
      cm.at(n, k) = v;
    }
  return cm;
}

Rational path_weight_enumeration(const WeightTriple& w, std::size_t n, std::size_t k) {
  validate(w);
  if (!(k <= n && n + k <= 2 * w.d)) throw Error(ErrorKind::IndexOutOfRange, "(n,k) outside V");
  Rational hit(0);
  dfs(w, 0, 0, Rational(1), n, k, hit, nullptr);
  return hit;
}

CatalanMatrix path_weight_table(const WeightTriple& w) {
  validate(w);
  CatalanMatrix table(w.d);
  Rational unused;
  dfs(w, 0, 0, Rational(1), 0, 0, unused, &table);
  return table;
}

std::vector<Rational> catalan_numbers(const WeightTriple& w) {
  const auto cm = catalan_matrix(w);
  std::vector<Rational> out;
  for (std::size_t n = 0; n <= 2 * w.d; ++n) out.push_back(cm.at(n, 0));
  return out;
}

PartialWeights weights_from_matrix(const CatalanMatrix& cm) {
  PartialWeights out;
  out.c.push_back(0);
  out.a.push_back(cm.or_zero(1, 0));
  for (std::size_t n = 1; n <= cm.d(); ++n) {
    const Rational& prev = cm.at(n - 1, n - 1);
    if (sgn(prev) == 0) throw Error(ErrorKind::DivisionByZero, "f_{" + std::to_string(n - 1) + "," + std::to_string(n - 1) + "} = 0");
    out.c.push_back(cm.at(n, n) / prev);
    if (!cm.contains(n + 1, n)) continue;
    const Rational& diag = cm.at(n, n);
    if (sgn(diag) == 0) throw Error(ErrorKind::DivisionByZero, "f_{" + std::to_string(n) + "," + std::to_string(n) + "} = 0");
    out.a.push_back(cm.at(n + 1, n) / diag - cm.at(n, n - 1) / prev);
  }
  return out;
}

PartialWeights recover_weights(const std::vector<Rational>& moments, const Rational& m) {
  auto fail = [](std::size_t step, const std::string& what) -> void {
    throw Error(ErrorKind::InconsistentMoments, "step t = " + std::to_string(step) + ": " + what);
  };
  PartialWeights out;
  out.a.push_back(0);
  out.c.push_back(0);
  std::vector<Rational> b;  // b_0*, b_1*, .. once a_i*, c_i* are both known
  const std::size_t t_max = moments.size();
  for (std::size_t t = 1; t <= t_max; ++t) {
    const Rational& target = moments[t - 1];
    if (t == 1) {
      if (sgn(target) != 0) fail(1, "B_1 must vanish since a_0* = 0");
      b.push_back(m);
      continue;
    }
    const std::size_t mu = t / 2;
    if (b.size() < mu) fail(t, "b_" + std::to_string(b.size()) + "* is not determined");
    Rational coefficient(1);
    for (std::size_t i = 0; i < mu; ++i) coefficient *= b[i];
    // f_{mu-1,mu-1} resp. f_{mu,mu} is the product of the known c*'s.
    const std::size_t ups = t % 2 == 0 ? mu - 1 : mu;
    for (std::size_t j = 1; j <= ups; ++j) coefficient *= out.c[j];
    if (sgn(coefficient) == 0) fail(t, "coefficient of the unknown weight vanishes");
    std::vector<Rational> a = out.a, c = out.c;
    std::vector<Rational> bb = b;
    if (t % 2 == 0) {
      c.push_back(0);
    } else {
      a.push_back(0);
    }
    const Rational base = column_zero(a, bb, c, t);
    const Rational solved = (target - base) / coefficient;
    if (sgn(solved) < 0) fail(t, (t % 2 == 0 ? idx("c", mu) : idx("a", mu)) + " = " + exact::to_string(solved) + " < 0");
    if (t % 2 == 0) {
      if (t == 2 && solved != 1) fail(2, "B_2 = " + exact::to_string(target) + " differs from m = " + exact::to_string(m));
      out.c.push_back(solved);
    } else {
      out.a.push_back(solved);
      const Rational bmu = m - out.a[mu] - out.c[mu];
      if (sgn(bmu) < 0) fail(t, idx("b", mu) + " = " + exact::to_string(bmu) + " < 0");
      b.push_back(bmu);
    }
  }
  return out;
}

Rational sphere_moments(const Rational& m, std::size_t i) {
  if (i % 2 == 1) return 0;
  // (i-1)!!(m-2)!!/(m+i-2)!! = prod_{r < i/2} (2r+1)/(m+2r).
  Rational acc(1);
  for (std::size_t r = 0; r < i / 2; ++r) acc *= Rational(static_cast<long>(2 * r + 1)) / (m + Rational(2 * static_cast<long>(r)));
  return acc;
}

Rational sphere_catalan_closed_form(const Rational& m, std::size_t n, std::size_t k) {
  return exact::pow(m, static_cast<unsigned>(n)) * g_coefficient(m, n, k);
}

bool sphere_weight_check(const WeightTriple& w, std::size_t t) {
  const std::size_t a_top = t >= 1 ? (t - 1) / 2 : 0;
  const std::size_t c_top = t >= 1 ? t / 2 : 0;  // ceil((t-1)/2)
  if (t >= 1 && (a_top > w.d || c_top > w.d)) return false;
  if (t >= 1)
    for (std::size_t i = 0; i <= a_top; ++i)
      if (sgn(w.a[i]) != 0) return false;
  for (std::size_t j = 1; j <= c_top; ++j) {
    const Rational jj(static_cast<long>(j));
    if (w.c[j] != w.m * jj / (w.m + 2 * jj - 2)) return false;
  }
  return true;
}

std::vector<Poly> orthogonal_polys(const WeightTriple& w) {
  validate(w);
  std::vector<Poly> v{Poly::constant(1), Poly::x()};
  for (std::size_t k = 1; k < w.d; ++k) {
    Poly next = Poly::x() * v[k] - v[k] * w.a[k] - v[k - 1] * w.b[k - 1];
    v.push_back(next * (1 / w.c[k + 1]));
  }
  return v;
}

bool expansion_coeffs_check(const WeightTriple& w, std::size_t n) {
  if (n > w.d) throw Error(ErrorKind::IndexOutOfRange, "n > d");
  const auto cm = catalan_matrix(w);
  const auto v = orthogonal_polys(w);
  Poly sum;
  for (std::size_t k = 0; k <= n; ++k) sum += v[k] * cm.at(n, k);
  return sum == Poly::monomial(1, n);
}

Poly gegenbauer(const Rational& m, std::size_t k) {
  Poly prev = Poly::constant(1);
  if (k == 0) return prev;
  Poly cur = Poly::monomial(m, 1);
  for (std::size_t j = 1; j < k; ++j) {
    const long jl = static_cast<long>(j);
    // At j = 1 the ratio (m+j-3)/(m+2j-4) is identically 1.
    const Rational ratio = j == 1 ? Rational(1) : (m + jl - 3) / (m + 2 * jl - 4);
    Poly next = (Poly::x() * cur - prev * ratio) * ((m + 2 * jl) / Rational(jl + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

MonomialExpansion monomial_in_gegenbauer(const Rational& m, std::size_t n) {
  MonomialExpansion out;
  const Rational mn = exact::pow(m, static_cast<unsigned>(n));
  Poly sum;
  for (std::size_t k = 0; k <= n; ++k) {
    out.g.push_back(g_coefficient(m, n, k));
    out.h.push_back(mn * out.g.back());
    if (sgn(out.h.back()) != 0) sum += gegenbauer(m, k).scale_argument(1 / m) * out.h.back();
  }
  out.verified = sum == Poly::monomial(1, n);
  return out;
}

}  // namespace schemekit::catalan
