#include "report.hpp"

#include <sstream>

#include "schemekit/error.hpp"

namespace schemekit::cli {

namespace {

template <class T, class F>
Json array_of(const std::vector<T>& v, F&& f) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(f(x));
  return out;
}

Json rationals(const std::vector<exact::Rational>& v) {
  return array_of(v, [](const exact::Rational& q) { return str(q); });
}

std::size_t resolve_tmax(const Analysis& a, std::size_t t_max) { return t_max == 0 ? 2 * a.scheme.d : t_max; }

}  // namespace

std::string str(const exact::Rational& q) { return exact::to_string(q); }
std::string str(const exact::Scalar& s) { return s.to_string(); }

Input load_input(const std::string& family, const std::string& params, const std::string& file) {
  if (family.empty() == file.empty()) throw Error(ErrorKind::ParseError, "give exactly one of --family or --file");
  if (!file.empty()) return {file, generators::load_relation_file(file)};
  const auto spec = generators::parse_spec(family, params);
  return {spec.label(), generators::generate(spec)};
}

Analysis analyze_input(const Input& in) {
  Analysis a;
  a.source = in.source;
  a.scheme = scheme::validate_scheme(in.relations);
  a.krein = scheme::krein_parameters(a.scheme);
  a.orderings = qpoly::find_qpoly_orderings(a.krein, a.scheme);
  return a;
}

Json scheme_json(const Analysis& a) {
  const auto& sc = a.scheme;
  Json j;
  j["n"] = sc.n;
  j["d"] = sc.d;
  j["valencies"] = sc.valencies;
  j["multiplicities"] = sc.multiplicities;
  j["field"] = sc.field ? sc.field->describe() : "Q";
  j["p_polynomial"] = derived::is_ppolynomial(sc);
  j["q_polynomial"] = !a.orderings.empty();
  return j;
}

Json strength_json(const designs::StrengthReport& r) {
  Json j;
  j["route"] = designs::to_string(r.route);
  j["t"] = r.t;
  j["t_max"] = r.t_max;
  j["probe_t"] = r.probe_t;
  j["residuals"] = array_of(r.residuals, [](const designs::Residual& res) {
    Json x;
    x["degree"] = res.degree;
    x["quantity"] = res.quantity;
    x["value"] = str(res.value);
    x["target"] = str(res.target);
    x["pass"] = res.pass;
    return x;
  });
  return j;
}

Json weights_json(const qpoly::QPolyOrdering& ord) {
  Json j;
  j["perm"] = ord.perm;
  j["m"] = str(ord.m);
  j["a_star"] = rationals(ord.a_star);
  j["b_star"] = rationals(ord.b_star);
  j["c_star"] = rationals(ord.c_star);
  return j;
}

Section strength_section(const Analysis& a, const qpoly::QPolyOrdering& ord, std::size_t t_max, std::size_t probe) {
  const std::size_t tm = resolve_tmax(a, t_max);
  const auto e = designs::embed(a.scheme, ord);
  const auto moments = designs::strength_by_moments(e, tm, probe);
  const auto krein = designs::strength_by_krein(ord, tm);
  Section s;
  s.ok = moments.t == krein.t;
  s.json["moment"] = strength_json(moments);
  s.json["krein"] = strength_json(krein);
  s.json["agreement"] = s.ok;
  Json cos = Json::array();
  for (std::size_t j = 0; j < e.cosines.size(); ++j) cos.push_back({{"relation", j}, {"cosine", str(e.cosines[j])}, {"multiplicity", e.multiplicities[j]}});
  s.json["embedding"] = {{"m", str(e.m)}, {"cosines", cos}};
  return s;
}

Section derived_section(const Analysis& a, const qpoly::QPolyOrdering& ord, std::optional<std::size_t> only_class, std::size_t t_max) {
  const auto& sc = a.scheme;
  const std::size_t tm = resolve_tmax(a, t_max);
  Section s;
  s.json = Json::array();
  for (std::size_t i = 1; i <= sc.d; ++i) {
    if (only_class && *only_class != i) continue;
    Json c;
    c["class"] = i;
    derived::DerivedDesign dd;
    try {
      dd = derived::derived_design(sc, ord, i);
    } catch (const Error& e) {
      c["status"] = std::string(to_string(e.kind()));
      c["detail"] = e.detail();
      s.json.push_back(std::move(c));
      continue;
    }
    c["status"] = "ok";
    c["theta_i"] = str(dd.thetai);
    c["size"] = dd.size;
    c["angles"] = array_of(dd.angles, [](const derived::Angle& an) {
      return Json{{"relation", an.relation}, {"value", str(an.value)}, {"multiplicity", an.multiplicity}};
    });
    bool routes_agree = true;
    Json moments = Json::array();
    for (std::size_t h = 1; h <= sc.d; ++h) {
      const auto direct = derived::derived_moment(dd, h);
      const auto expansion = derived::derived_moment_expansion(dd, ord, h);
      routes_agree = routes_agree && direct == expansion;
      moments.push_back({{"h", h}, {"direct", str(direct)}, {"expansion", str(expansion)}});
    }
    c["moments"] = moments;
    c["expansion_agreement"] = routes_agree;
    s.ok = s.ok && routes_agree;
    std::optional<std::size_t> dt;
    try {
      const auto rep = derived::derived_strength_by_moments(dd, tm);
      dt = rep.t;
      c["strength"] = strength_json(rep);
    } catch (const Error& e) {
      c["strength"] = nullptr;
      c["strength_note"] = std::string(to_string(e.kind())) + ": " + e.detail();
    }
    Json preds = Json::object();
    for (std::size_t part = 2; part <= 5; ++part) {
      try {
        const bool p = derived::derived_predicates(ord, dd.thetai, part);
        Json pj{{"holds", p}};
        if (dt) {
          const bool agree = p == (*dt >= part);
          pj["agrees_with_moments"] = agree;
          s.ok = s.ok && agree;
        }
        preds[std::to_string(part)] = pj;
      } catch (const Error& e) {
        preds[std::to_string(part)] = Json{{"hypothesis", e.detail()}};
      }
    }
    c["predicates"] = preds;
    s.json.push_back(std::move(c));
  }
  return s;
}

Json bound_json(const derived::BoundReport& b) {
  Json j;
  j["p_polynomial"] = b.p_polynomial;
  j["relations_in_order"] = b.relations_in_order;
  j["theta0"] = str(b.theta0);
  j["in_hypothesis"] = b.in_hypothesis;
  j["strength"] = b.strength;
  j["verdict"] = !b.p_polynomial ? "not P-polynomial" : !b.in_hypothesis ? "out of hypothesis (theta0 < 3)" : b.violation ? "violation" : "t <= 8";
  j["d_star"] = b.d_star;
  j["dgs_derived_strength"] = b.dgs_derived_strength;
  return j;
}

Json catalan_json(const catalan::WeightTriple& w) {
  const auto cm = catalan::catalan_matrix(w);
  Json rows = Json::array();
  for (std::size_t n = 0; n <= 2 * w.d; ++n) {
    Json row = Json::array();
    for (std::size_t k = 0; k <= n && n + k <= 2 * w.d; ++k) row.push_back(str(cm.at(n, k)));
    rows.push_back(row);
  }
  return Json{{"d", w.d}, {"m", str(w.m)}, {"a_star", rationals(w.a)}, {"b_star", rationals(w.b)}, {"c_star", rationals(w.c)}, {"f", rows}};
}

Section analyze_report(const Analysis& a, std::size_t t_max, std::size_t probe) {
  Section s;
  s.json["source"] = a.source;
  s.json["scheme"] = scheme_json(a);
  Json ords = Json::array();
  for (const auto& ord : a.orderings) {
    Json o = weights_json(ord);
    o["catalan_numbers"] = rationals(catalan::catalan_numbers(designs::weight_triple(ord)));
    auto st = strength_section(a, ord, t_max, probe);
    o["strength"] = st.json;
    auto dv = derived_section(a, ord, std::nullopt, t_max);
    o["derived"] = dv.json;
    const auto bound = derived::pq_strength_bound_check(a.scheme, ord);
    o["bound_check"] = bound_json(bound);
    s.ok = s.ok && st.ok && dv.ok && !bound.violation;
    ords.push_back(std::move(o));
  }
  s.json["orderings"] = ords;
  s.json["ok"] = s.ok;
  return s;
}

namespace {

std::string join(const Json& arr) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += ", ";
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

void render_strength(std::ostringstream& o, const Json& st, const std::string& indent) {
  o << indent << "strength: moments t=" << st["moment"]["t"].get<std::size_t>() << ", krein t=" << st["krein"]["t"].get<std::size_t>()
    << " (t_max " << st["moment"]["t_max"].get<std::size_t>() << ")" << (st["agreement"].get<bool>() ? "" : "  ROUTES DISAGREE") << "\n";
  if (st["moment"]["probe_t"] != st["moment"]["t"]) o << indent << "  probe: moments pass through degree " << st["moment"]["probe_t"].get<std::size_t>() << "\n";
  for (const auto& r : st["moment"]["residuals"])
    o << indent << "  " << r["quantity"].get<std::string>() << " = " << r["value"].get<std::string>() << "  sphere " << r["target"].get<std::string>()
      << (r["pass"].get<bool>() ? "" : "  x") << "\n";
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream o;
  if (report.contains("source")) o << report["source"].get<std::string>() << "\n";
  if (report.contains("scheme")) {
    const auto& s = report["scheme"];
    o << "  n=" << s["n"].get<std::size_t>() << " d=" << s["d"].get<std::size_t>() << "  k = (" << join(s["valencies"]) << ")  m = ("
      << join(s["multiplicities"]) << ")\n";
    o << "  field " << s["field"].get<std::string>() << (s["p_polynomial"].get<bool>() ? ", P-polynomial" : "")
      << (s["q_polynomial"].get<bool>() ? ", Q-polynomial" : ", not Q-polynomial") << "\n";
  }
  if (report.contains("orderings")) {
    for (const auto& ord : report["orderings"]) {
      o << "ordering (" << join(ord["perm"]) << ")  m = " << ord["m"].get<std::string>() << "\n";
      o << "  a* = (" << join(ord["a_star"]) << ")\n  b* = (" << join(ord["b_star"]) << ")\n  c* = (" << join(ord["c_star"]) << ")\n";
      if (ord.contains("catalan_numbers")) o << "  B = (" << join(ord["catalan_numbers"]) << ")\n";
      if (ord.contains("strength")) render_strength(o, ord["strength"], "  ");
      if (ord.contains("derived"))
        for (const auto& c : ord["derived"]) {
          o << "  class " << c["class"].get<std::size_t>() << ": ";
          if (c["status"] != "ok") {
            o << c["status"].get<std::string>() << "\n";
            continue;
          }
          o << "theta_i = " << c["theta_i"].get<std::string>() << ", " << c["size"].get<long>() << " points, angles";
          for (const auto& an : c["angles"]) o << " [" << an["value"].get<std::string>() << " x" << an["multiplicity"].get<long>() << "]";
          o << "\n    ";
          if (c["strength"].is_null())
            o << c["strength_note"].get<std::string>();
          else
            o << "derived strength " << c["strength"]["t"].get<std::size_t>();
          o << (c["expansion_agreement"].get<bool>() ? ", expansion route agrees" : ", EXPANSION ROUTE DISAGREES") << "\n";
          for (const auto& [part, p] : c["predicates"].items())
            if (p.contains("holds"))
              o << "    predicate s=" << part << ": " << (p["holds"].get<bool>() ? "holds" : "fails")
                << (p.contains("agrees_with_moments") && !p["agrees_with_moments"].get<bool>() ? "  DISAGREES" : "") << "\n";
        }
      if (ord.contains("bound_check")) {
        const auto& b = ord["bound_check"];
        o << "  bound check: " << b["verdict"].get<std::string>() << " (strength " << b["strength"].get<std::size_t>() << ", theta0 "
          << b["theta0"].get<std::string>() << ", d* " << b["d_star"].get<std::size_t>() << ")\n";
      }
    }
    if (report["orderings"].empty()) o << "no Q-polynomial ordering\n";
  }
  return o.str();
}

}  // namespace schemekit::cli
