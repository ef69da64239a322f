#include "schemekit/designs.hpp"

#include <algorithm>
#include <functional>

#include "schemekit/error.hpp"

namespace schemekit::designs {

namespace {

void finish(StrengthReport& r) {
  r.t = 0;
  r.probe_t = 0;
  bool ok = true;
  for (const auto& res : r.residuals) {
    ok = ok && res.pass;
    if (!ok) break;
    if (res.degree <= r.t_max) r.t = res.degree;
    r.probe_t = res.degree;
  }
}

Scalar pow_scalar(const Scalar& s, std::size_t i) { return exact::pow(s, static_cast<unsigned>(i)); }

}  // namespace

std::string to_string(Route r) { return r == Route::MomentCriterion ? "moment-criterion" : "krein-criterion"; }

Embedding embed_idempotent(const SchemeCore& sc, std::size_t idempotent) {
  if (idempotent == 0 || idempotent > sc.d) throw Error(ErrorKind::IndexOutOfRange, "idempotent " + std::to_string(idempotent));
  Embedding e;
  e.n = sc.n;
  e.d = sc.d;
  e.m = Rational(sc.multiplicities[idempotent]);
  const Scalar m(e.m);
  for (std::size_t j = 0; j <= sc.d; ++j) {
    e.cosines.push_back(sc.Q(j, idempotent) / m);
    e.multiplicities.push_back(sc.valencies[j]);
    if (j > 0 && e.cosines.back() == Scalar(1))
      throw Error(ErrorKind::RepeatedRows, "E_" + std::to_string(idempotent) + " has equal rows on relation " + std::to_string(j));
  }
  return e;
}

Embedding embed(const SchemeCore& sc, const QPolyOrdering& ord) {
  if (ord.perm.size() != sc.d + 1) throw Error(ErrorKind::ClassCountMismatch, "ordering length");
  return embed_idempotent(sc, ord.perm[1]);
}

Scalar moment(const Embedding& e, std::size_t i) {
  Scalar acc(0);
  for (std::size_t j = 0; j < e.cosines.size(); ++j) acc += Scalar(e.multiplicities[j]) * pow_scalar(e.cosines[j], i);
  return acc / Scalar(static_cast<long>(e.n));
}

catalan::WeightTriple weight_triple(const QPolyOrdering& ord) {
  catalan::WeightTriple w;
  w.d = ord.perm.size() - 1;
  w.a = ord.a_star;
  w.b = ord.b_star;
  w.c = ord.c_star;
  w.m = ord.m;
  catalan::validate(w);
  return w;
}

StrengthReport strength_by_moments(const Embedding& e, std::size_t t_max, std::size_t probe) {
  StrengthReport r;
  r.route = Route::MomentCriterion;
  r.t_max = t_max;
  for (std::size_t i = 1; i <= std::max(t_max, probe); ++i) {
    Residual res;
    res.degree = i;
    res.quantity = "moment_" + std::to_string(i);
    res.value = moment(e, i);
    res.target = catalan::sphere_moments(e.m, i);
    res.pass = res.value == res.target;
    r.residuals.push_back(std::move(res));
  }
  finish(r);
  return r;
}

StrengthReport strength_by_krein(const QPolyOrdering& ord, std::size_t t_max, std::size_t probe) {
  const auto w = weight_triple(ord);
  StrengthReport r;
  r.route = Route::KreinCriterion;
  r.t_max = t_max;
  for (std::size_t t = 1; t <= std::max(t_max, probe); ++t) {
    Residual res;
    res.degree = t;
    const std::size_t mu = t / 2;
    if (t % 2 == 1) {
      res.quantity = "a_" + std::to_string(mu) + "*";
      res.target = 0;
      if (mu <= w.d) res.value = w.a[mu];
    } else {
      const Rational mm(static_cast<long>(mu));
      res.quantity = "c_" + std::to_string(mu) + "*";
      res.target = Rational(w.m * mm / (w.m + 2 * mm - 2));
      if (mu <= w.d) res.value = w.c[mu];
    }
    res.pass = mu <= w.d && catalan::sphere_weight_check(w, t);
    r.residuals.push_back(std::move(res));
  }
  finish(r);
  return r;
}

bool krein_moment_identity(const SchemeCore& sc, const KreinTensor& kt, const QPolyOrdering& ord, std::size_t i) {
  const std::size_t d = sc.d;
  if (i < 1 || i > 2 * d) throw Error(ErrorKind::IndexOutOfRange, "degree must lie in 1..2d");
  const auto cm = catalan::catalan_matrix(weight_triple(ord));
  const Rational& f = cm.at(i, 0);
  const Scalar mom = moment(embed(sc, ord), i);
  if (mom * Scalar(exact::pow(ord.m, static_cast<unsigned>(i))) != Scalar(f)) return false;
  if (i > 6) return true;
  const std::size_t one = ord.perm[1];
  Scalar nested(0);
  std::function<void(std::size_t, std::size_t, const Scalar&)> walk = [&](std::size_t depth, std::size_t prev, const Scalar& w) {
    if (depth == i) {
      nested += w * kt(one, ord.perm[prev], 0);
      return;
    }
    for (std::size_t l = 0; l <= d; ++l) {
      const Scalar& q = kt(one, ord.perm[prev], ord.perm[l]);
      if (!q.is_zero()) walk(depth + 1, l, w * q);
    }
  };
  walk(1, 0, Scalar(1));
  return nested == Scalar(f);
}

}  // namespace schemekit::designs
