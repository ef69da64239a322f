#include "verify.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "report.hpp"
#include "schemekit/error.hpp"

namespace schemekit::cli {

namespace {

using exact::Rational;
using exact::Scalar;

struct Corpus {
  std::vector<Analysis> schemes;
};

struct Context {
  const VerifyOptions& opts;
  const Corpus& corpus;
};

using Check = std::function<std::string(const Context&)>;  // empty string = pass

struct Property {
  const char* name;
  Check check;
};

std::string fail_at(const Analysis& a, const std::string& what) { return a.source + ": " + what; }

std::string check_scheme_invariants(const Context& ctx) {
  for (const auto& a : ctx.corpus.schemes) {
    const auto& sc = a.scheme;
    const auto& kt = a.krein;
    const std::size_t D = sc.d + 1;
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j < D; ++j)
        for (std::size_t k = 0; k < D; ++k) {
          if (sc.intersection(i, j, k) != sc.intersection(j, i, k)) return fail_at(a, "p_{i,j}^k != p_{j,i}^k");
          if (sc.valencies[k] * sc.intersection(i, j, k) != sc.valencies[i] * sc.intersection(k, j, i))
            return fail_at(a, "k_k p_{i,j}^k != k_i p_{k,j}^i");
          if (kt(i, j, k) != kt(j, i, k)) return fail_at(a, "q_{i,j}^k != q_{j,i}^k");
          if (kt(i, 0, k) != Scalar(i == k ? 1 : 0)) return fail_at(a, "q_{i,0}^k != delta");
        }
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j < D; ++j)
        if (kt(i, j, 0) != Scalar(i == j ? sc.multiplicities[i] : 0)) return fail_at(a, "q_{i,j}^0 != delta m_i");
    for (std::size_t k = 0; k < D && D > 1; ++k) {
      Scalar row(0);
      for (std::size_t j = 0; j < D; ++j) row += kt(1, j, k);
      if (row != Scalar(sc.multiplicities[1])) return fail_at(a, "sum_j q_{1,j}^k != m_1");
    }
    if (sc.P * sc.Q != exact::ScalarMatrix::identity(D) * Scalar(static_cast<long>(sc.n)) ||
        sc.Q * sc.P != exact::ScalarMatrix::identity(D) * Scalar(static_cast<long>(sc.n)))
      return fail_at(a, "PQ != nI");
    for (bool ok : scheme::dual_eigen_consistency(sc))
      if (!ok) return fail_at(a, "E_j != (1/n) sum q_j(i) A_i");
  }
  return {};
}

template <class F>
std::string for_orderings(const Context& ctx, F&& f) {
  for (const auto& a : ctx.corpus.schemes)
    for (const auto& ord : a.orderings) {
      const std::string r = f(a, ord);
      if (!r.empty()) return fail_at(a, r);
    }
  return {};
}

std::string check_route_agreement(const Context& ctx) {
  return for_orderings(ctx, [](const Analysis& a, const qpoly::QPolyOrdering& ord) -> std::string {
    const std::size_t tm = 2 * a.scheme.d;
    const auto m = designs::strength_by_moments(designs::embed(a.scheme, ord), tm);
    const auto k = designs::strength_by_krein(ord, tm);
    if (m.t != k.t) return "moment route t=" + std::to_string(m.t) + ", krein route t=" + std::to_string(k.t);
    if (m.t < 2) return "strength below 2";
    return {};
  });
}

std::string check_degree_bridge(const Context& ctx) {
  return for_orderings(ctx, [](const Analysis& a, const qpoly::QPolyOrdering& ord) -> std::string {
    for (std::size_t i = 1; i <= 2 * a.scheme.d; ++i)
      if (!designs::krein_moment_identity(a.scheme, a.krein, ord, i)) return "moment*m^i != f_{i,0} at i=" + std::to_string(i);
    return {};
  });
}

std::string check_sidelnikov(const Context& ctx) {
  return for_orderings(ctx, [](const Analysis& a, const qpoly::QPolyOrdering& ord) -> std::string {
    const auto e = designs::embed(a.scheme, ord);
    for (std::size_t i = 2; i <= 2 * a.scheme.d; i += 2)
      if (designs::moment(e, i) < Scalar(catalan::sphere_moments(e.m, i))) return "even moment below the sphere value at i=" + std::to_string(i);
    return {};
  });
}

std::string check_dual_intersection(const Context& ctx) {
  for (const auto& a : ctx.corpus.schemes)
    if (!derived::dual_intersection_identity(a.scheme)) return fail_at(a, "sum_j q_h(j) p_{i,j}^i != k_i q_h(i)^2/m_h");
  return {};
}

std::string check_derived_routes(const Context& ctx) {
  return for_orderings(ctx, [](const Analysis& a, const qpoly::QPolyOrdering& ord) -> std::string {
    for (std::size_t i = 1; i <= a.scheme.d; ++i) {
      derived::DerivedDesign dd;
      try {
        dd = derived::derived_design(a.scheme, ord, i);
      } catch (const Error&) {
        continue;
      }
      for (std::size_t h = 1; h <= a.scheme.d; ++h)
        if (derived::derived_moment(dd, h) != derived::derived_moment_expansion(dd, ord, h))
          return "class " + std::to_string(i) + " h=" + std::to_string(h);
    }
    return {};
  });
}

std::string check_derived_predicates(const Context& ctx) {
  std::size_t checked = 0;
  const std::string r = for_orderings(ctx, [&](const Analysis& a, const qpoly::QPolyOrdering& ord) -> std::string {
    if (a.scheme.d < 5 || ord.m < 3) return {};
    for (std::size_t i = 1; i <= a.scheme.d; ++i) {
      derived::DerivedDesign dd;
      try {
        dd = derived::derived_design(a.scheme, ord, i);
      } catch (const Error&) {
        continue;
      }
      const std::size_t t = derived::derived_strength_by_moments(dd, 2 * a.scheme.d).t;
      for (std::size_t s = 2; s <= 5; ++s) {
        bool p = false;
        try {
          p = derived::derived_predicates(ord, dd.thetai, s);
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::HypothesisUnmet) continue;
          throw;
        }
        ++checked;
        if (p != (t >= s)) return "class " + std::to_string(i) + " part s=" + std::to_string(s);
      }
    }
    return {};
  });
  if (!r.empty()) return r;
  return checked == 0 ? "no admissible case in the corpus" : std::string();
}

std::string check_pq_bound(const Context& ctx) {
  return for_orderings(ctx, [](const Analysis& a, const qpoly::QPolyOrdering& ord) -> std::string {
    const auto b = derived::pq_strength_bound_check(a.scheme, ord);
    if (b.violation) return "strength " + std::to_string(b.strength) + " > 8";
    return {};
  });
}

std::string check_ppolynomial(const Context& ctx) {
  for (const auto& a : ctx.corpus.schemes)
    if (!derived::is_ppolynomial(a.scheme)) return fail_at(a, "distance partition not P-polynomial");
  return {};
}

std::string check_orderings_fixed_point(const Context& ctx) {
  return for_orderings(ctx, [](const Analysis& a, const qpoly::QPolyOrdering& ord) -> std::string {
    const auto sc = scheme::relabel_idempotents(a.scheme, ord.perm);
    const auto kt = scheme::relabel(a.krein, ord.perm);
    for (const auto& o : qpoly::find_qpoly_orderings(kt, sc)) {
      bool identity = true;
      for (std::size_t i = 0; i < o.perm.size(); ++i) identity = identity && o.perm[i] == i;
      if (identity) return {};
    }
    return "identity ordering missing after relabeling";
  });
}

std::string check_file_roundtrip(const Context& ctx) {
  for (const auto& a : ctx.corpus.schemes) {
    const auto& rp = a.scheme.relations;
    if (generators::parse_relation_json(generators::serialize(rp)) != rp) return fail_at(a, "serialize/load round trip");
  }
  return {};
}

std::string check_catalan_oracle(const Context& ctx) {
  std::mt19937_64 rng(ctx.opts.seed);
  for (std::size_t r = 0; r < ctx.opts.random_triples; ++r) {
    const std::size_t d = 1 + r % 5;
    const auto w = catalan::random_weights(rng, d);
    if (catalan::catalan_matrix(w) != catalan::path_weight_table(w)) return "triple " + std::to_string(r) + " (d=" + std::to_string(d) + ")";
  }
  return {};
}

std::string check_recover_roundtrip(const Context& ctx) {
  std::mt19937_64 rng(ctx.opts.seed + 1);
  for (std::size_t r = 0; r < ctx.opts.random_triples; ++r) {
    const std::size_t d = 1 + r % 6;
    const auto w = catalan::random_weights(rng, d);
    const auto b = catalan::catalan_numbers(w);
    const auto rec = catalan::recover_weights(std::vector<Rational>(b.begin() + 1, b.end()), w.m);
    for (std::size_t i = 0; i < rec.a.size(); ++i)
      if (rec.a[i] != w.a[i]) return "triple " + std::to_string(r) + " a_" + std::to_string(i) + "*";
    for (std::size_t i = 0; i < rec.c.size(); ++i)
      if (rec.c[i] != w.c[i]) return "triple " + std::to_string(r) + " c_" + std::to_string(i) + "*";
    if (rec.a.size() != d || rec.c.size() != d + 1) return "triple " + std::to_string(r) + ": recovered range";
  }
  return {};
}

// Three independent predicates of the sphere-weight characterization.
bool moments_match(const catalan::WeightTriple& w, std::size_t t) {
  const auto b = catalan::catalan_numbers(w);
  for (std::size_t i = 1; i <= t; ++i)
    if (i >= b.size() || b[i] != exact::pow(w.m, static_cast<unsigned>(i)) * catalan::sphere_moments(w.m, i)) return false;
  return true;
}

bool closed_form_match(const catalan::WeightTriple& w, std::size_t t) {
  const auto cm = catalan::catalan_matrix(w);
  for (std::size_t n = 0; n <= t; ++n)
    for (std::size_t k = 0; k <= n && n + k <= t; ++k) {
      if (!cm.contains(n, k)) return false;
      if (cm.at(n, k) != catalan::sphere_catalan_closed_form(w.m, n, k)) return false;
    }
  return true;
}

std::vector<catalan::WeightTriple> sphere_family(const Rational& m) {
  std::vector<catalan::WeightTriple> out;
  const std::size_t d = 5;
  const auto base = catalan::sphere_weights(m, d);
  out.push_back(base);
  // Perturb one weight at a time so each degree's condition is exercised.
  for (std::size_t i = 1; i < d; ++i) {
    auto a = base.a, c = base.c;
    a[i] = base.b[i] / 2;
    out.push_back(catalan::make_weights(a, base.c, m));
    if (i >= 2) {
      c[i] = base.c[i] + (m - base.c[i]) / 3;
      out.push_back(catalan::make_weights(base.a, c, m));
    }
  }
  return out;
}

std::string check_sphere_equivalence(const Context&) {
  for (long mi = 3; mi <= 8; ++mi) {
    const Rational m(mi);
    for (const auto& w : sphere_family(m))
      for (std::size_t t = 1; t <= 8; ++t) {
        const bool p1 = moments_match(w, t), p2 = closed_form_match(w, t), p3 = catalan::sphere_weight_check(w, t);
        if (p1 != p2 || p2 != p3) return "m=" + std::to_string(mi) + " t=" + std::to_string(t);
      }
  }
  return {};
}

std::string check_polynomial_identities(const Context& ctx) {
  std::mt19937_64 rng(ctx.opts.seed + 2);
  for (std::size_t r = 0; r < 50; ++r) {
    const auto w = catalan::random_weights(rng, 1 + r % 6);
    for (std::size_t n = 0; n <= w.d; ++n)
      if (!catalan::expansion_coeffs_check(w, n)) return "expansion, triple " + std::to_string(r) + " n=" + std::to_string(n);
  }
  for (long m = 3; m <= 8; ++m)
    for (std::size_t n = 0; n <= 8; ++n)
      if (!catalan::monomial_in_gegenbauer(Rational(m), n).verified) return "gegenbauer m=" + std::to_string(m) + " n=" + std::to_string(n);
  return {};
}

const std::vector<Property>& registry() {
  static const std::vector<Property> props = {
      {"scheme-invariants", check_scheme_invariants},
      {"route-agreement", check_route_agreement},
      {"degree-bridge", check_degree_bridge},
      {"sidelnikov", check_sidelnikov},
      {"ordering-fixed-point", check_orderings_fixed_point},
      {"dual-intersection", check_dual_intersection},
      {"derived-two-route", check_derived_routes},
      {"derived-predicates", check_derived_predicates},
      {"pq-bound", check_pq_bound},
      {"p-polynomial", check_ppolynomial},
      {"file-roundtrip", check_file_roundtrip},
      {"catalan-oracle", check_catalan_oracle},
      {"recover-roundtrip", check_recover_roundtrip},
      {"sphere-equivalence", check_sphere_equivalence},
      {"polynomial-identities", check_polynomial_identities},
  };
  return props;
}

bool needs_corpus(const std::string& name) {
  static const std::set<std::string> pure = {"catalan-oracle", "recover-roundtrip", "sphere-equivalence", "polynomial-identities"};
  return !pure.count(name);
}

}  // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (const auto& p : registry()) out.emplace_back(p.name);
  return out;
}

std::vector<PropertyOutcome> run_verify(const VerifyOptions& opts, const std::function<void(const PropertyOutcome&)>& on_result) {
  const auto names = property_names();
  for (const auto& o : opts.only)
    if (std::find(names.begin(), names.end(), o) == names.end()) throw Error(ErrorKind::ParseError, "unknown property '" + o + "'");
  auto selected = [&](const std::string& n) { return opts.only.empty() || opts.only.count(n) > 0; };
  Corpus corpus;
  bool want_corpus = false;
  for (const auto& n : names) want_corpus = want_corpus || (selected(n) && needs_corpus(n));
  if (want_corpus)
    for (const auto& spec : generators::corpus()) corpus.schemes.push_back(analyze_input({spec.label(), generators::generate(spec)}));
  const Context ctx{opts, corpus};
  std::vector<PropertyOutcome> out;
  for (const auto& p : registry()) {
    if (!selected(p.name)) continue;
    PropertyOutcome r{p.name, false, {}};
    try {
      r.detail = p.check(ctx);
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace schemekit::cli
