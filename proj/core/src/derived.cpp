#include "schemekit/derived.hpp"

#include <string>

#include "schemekit/catalan.hpp"
#include "schemekit/error.hpp"

namespace schemekit::derived {

namespace {

Scalar evaluate(const exact::QPolynomial& p, const Scalar& x) {
  Scalar acc(0);
  for (long i = p.degree(); i >= 0; --i) acc = acc * x + Scalar(p[i]);
  return acc;
}

Rational binomial(std::size_t n, std::size_t k) {
  Rational acc(1);
  for (std::size_t j = 1; j <= k; ++j) acc = acc * static_cast<long>(n - k + j) / static_cast<long>(j);
  return acc;
}

}  // namespace

bool dual_intersection_identity(const SchemeCore& sc) {
  const std::size_t D = sc.d + 1;
  for (std::size_t h = 0; h < D; ++h)
    for (std::size_t i = 0; i < D; ++i) {
      Scalar lhs(0);
      for (std::size_t j = 0; j < D; ++j) {
        const long p = sc.intersection(i, j, i);
        if (p != 0) lhs += sc.Q(j, h) * Scalar(p);
      }
      const Scalar rhs = Scalar(sc.valencies[i]) * sc.Q(i, h) * sc.Q(i, h) / Scalar(sc.multiplicities[h]);
      if (lhs != rhs) return false;
    }
  return true;
}

DerivedDesign derived_design(const SchemeCore& sc, const QPolyOrdering& ord, std::size_t i) {
  if (i == 0) throw Error(ErrorKind::SelfClass, "class 0 has no derived design");
  if (i > sc.d) throw Error(ErrorKind::IndexOutOfRange, "class " + std::to_string(i));
  const std::size_t e1 = ord.perm[1];
  DerivedDesign dd;
  dd.i = i;
  dd.theta0 = Rational(sc.multiplicities[e1]);
  dd.thetai = sc.Q(i, e1);
  dd.size = sc.valencies[i];
  const Scalar t0(dd.theta0);
  if (dd.thetai == -t0) throw Error(ErrorKind::AntipodalClass, "theta_" + std::to_string(i) + "* = -theta_0*");
  if (dd.thetai == t0) throw Error(ErrorKind::RepeatedRows, "theta_" + std::to_string(i) + "* = theta_0*");
  const Scalar ti2 = dd.thetai * dd.thetai;
  const Scalar denom = t0 * t0 - ti2;
  for (std::size_t j = 0; j <= sc.d; ++j) {
    const long p = sc.intersection(i, j, i);
    if (p == 0) continue;
    dd.angles.push_back({(t0 * sc.Q(j, e1) - ti2) / denom, p, j});
  }
  return dd;
}

Scalar derived_moment(const DerivedDesign& dd, std::size_t h) {
  Scalar acc(0);
  for (const auto& a : dd.angles) acc += Scalar(a.multiplicity) * exact::pow(a.value, static_cast<unsigned>(h));
  return acc / Scalar(dd.size);
}

Scalar derived_moment_expansion(const DerivedDesign& dd, const QPolyOrdering& ord, std::size_t h) {
  const auto w = designs::weight_triple(ord);
  if (h > w.d) throw Error(ErrorKind::IndexOutOfRange, "expansion route needs h <= d");
  const auto cm = catalan::catalan_matrix(w);
  const auto v = catalan::orthogonal_polys(w);
  const Scalar t0(dd.theta0);
  const Scalar ti2 = dd.thetai * dd.thetai;
  Scalar total(0);
  for (std::size_t n = 0; n <= h; ++n) {
    Scalar inner(0);
    for (std::size_t l = 0; l <= n; ++l) {
      const Rational& f = cm.at(n, l);
      if (sgn(f) == 0) continue;
      const Scalar vi = evaluate(v[l], dd.thetai);
      inner += Scalar(f) * vi * vi / evaluate(v[l], t0);
    }
    total += Scalar(binomial(h, n)) * exact::pow(-ti2, static_cast<unsigned>(h - n)) * exact::pow(t0, static_cast<unsigned>(n)) * inner;
  }
  return total / exact::pow(t0 * t0 - ti2, static_cast<unsigned>(h));
}

bool derived_predicates(const QPolyOrdering& ord, const Scalar& thetai, std::size_t s) {
  const std::size_t d = ord.perm.size() - 1;
  if (s < 2 || s > 5) throw Error(ErrorKind::IndexOutOfRange, "s must lie in 2..5");
  if (d < 5) throw Error(ErrorKind::HypothesisUnmet, "d = " + std::to_string(d) + " < 5");
  if (s >= 3) {
    const std::size_t need = 2 * (s - 1);
    const auto rep = designs::strength_by_krein(ord, 2 * d);
    if (rep.t < need)
      throw Error(ErrorKind::HypothesisUnmet, "embedding is a " + std::to_string(rep.t) + "-design, part needs a " + std::to_string(need) + "-design");
  }
  const Scalar t0(ord.m);
  const Scalar& x = thetai;
  const Scalar a(ord.a_star[s - 1]);
  Scalar poly;
  switch (s) {
    case 2:
      poly = x + Scalar(1);
      break;
    case 3:
      poly = (t0 + 2) * x * x + Scalar(2) * t0 * x - t0 * t0;
      break;
    case 4:
      poly = (t0 + 4) * (t0 - 2) * exact::pow(x, 3) - Scalar(3) * t0 * (t0 + 2) * x * x + Scalar(3) * t0 * t0 * (t0 + 2) * x +
             Scalar(3) * exact::pow(t0, 3);
      break;
    default:
      poly = (t0 + 4) * (t0 + 6) * exact::pow(x, 4) + Scalar(4) * t0 * (t0 + 4) * exact::pow(x, 3) -
             Scalar(6) * t0 * t0 * (t0 + 4) * x * x - Scalar(12) * exact::pow(t0, 3) * x + Scalar(3) * exact::pow(t0, 4);
      break;
  }
  return (a * poly).is_zero();
}

StrengthReport derived_strength_by_moments(const DerivedDesign& dd, std::size_t t_max) {
  if (dd.theta0 < 3) throw Error(ErrorKind::DegenerateSphere, "theta_0* = " + exact::to_string(dd.theta0) + " < 3");
  StrengthReport r;
  r.route = designs::Route::MomentCriterion;
  r.t_max = t_max;
  const Rational dim = dd.theta0 - 1;
  bool ok = true;
  for (std::size_t h = 1; h <= t_max; ++h) {
    designs::Residual res;
    res.degree = h;
    res.quantity = "derived_moment_" + std::to_string(h);
    res.value = derived_moment(dd, h);
    res.target = catalan::sphere_moments(dim, h);
    res.pass = res.value == res.target;
    ok = ok && res.pass;
    if (ok) r.t = r.probe_t = h;
    r.residuals.push_back(std::move(res));
  }
  return r;
}

std::optional<std::vector<std::size_t>> ppolynomial_ordering(const SchemeCore& sc) {
  const std::size_t D = sc.d + 1;
  for (std::size_t s = 1; s < D; ++s) {
    std::vector<std::size_t> perm{0, s};
    std::vector<bool> used(D, false);
    used[0] = used[s] = true;
    bool ok = true;
    while (ok && perm.size() < D) {
      std::optional<std::size_t> next;
      for (std::size_t l = 0; l < D; ++l) {
        if (used[l] || sc.intersection(s, perm.back(), l) == 0) continue;
        if (next) ok = false;
        next = l;
      }
      if (!next) ok = false;
      if (ok) {
        used[*next] = true;
        perm.push_back(*next);
      }
    }
    if (!ok) continue;
    for (std::size_t j = 0; j < D && ok; ++j)
      for (std::size_t k = 0; k < D && ok; ++k) {
        const long p = sc.intersection(s, perm[j], perm[k]);
        if ((j > k + 1 || k > j + 1) && p != 0) ok = false;
        if ((j + 1 == k || k + 1 == j) && p <= 0) ok = false;
      }
    if (ok) return perm;
  }
  return std::nullopt;
}

bool is_ppolynomial(const SchemeCore& sc) { return ppolynomial_ordering(sc).has_value(); }

BoundReport pq_strength_bound_check(const SchemeCore& sc, const QPolyOrdering& ord) {
  BoundReport r;
  const auto perm = ppolynomial_ordering(sc);
  r.p_polynomial = perm.has_value();
  if (perm) {
    r.relations_in_order = true;
    for (std::size_t i = 0; i < perm->size(); ++i) r.relations_in_order = r.relations_in_order && (*perm)[i] == i;
  }
  r.theta0 = ord.m;
  r.in_hypothesis = r.p_polynomial && r.theta0 >= 3;
  const auto e = designs::embed(sc, ord);
  r.strength = designs::strength_by_moments(e, 2 * sc.d).t;
  r.violation = r.in_hypothesis && r.strength > 8;
  const Scalar t0(r.theta0);
  for (std::size_t j = 1; j <= sc.d; ++j)
    if (sc.Q(j, ord.perm[1]) != -t0) ++r.d_star;
  r.dgs_derived_strength = static_cast<long>(r.strength) + 1 - static_cast<long>(r.d_star);
  return r;
}

}  // namespace schemekit::derived
