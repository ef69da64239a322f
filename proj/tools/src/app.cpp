#include "app.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "report.hpp"
#include "schemekit/error.hpp"
#include "verify.hpp"

namespace schemekit::cli {

namespace {

constexpr int kViolation = 1;
constexpr int kInputError = 2;

struct Common {
  std::string family;
  std::string params;
  std::string file;
  bool json = false;
  std::size_t t_max = 0;
  std::size_t probe = 0;
};

void add_source(CLI::App* cmd, Common& c) {
  cmd->add_option("--family", c.family, "named family: complete, cycle, hamming, johnson, petersen, cocktail_party, icosahedron");
  cmd->add_option("--params", c.params, "family parameters, e.g. d=3,q=2");
  cmd->add_option("--file", c.file, "scheme file (JSON)");
  cmd->add_flag("--json", c.json, "machine-readable output");
}

void add_tmax(CLI::App* cmd, Common& c) {
  cmd->add_option("--t-max", c.t_max, "largest degree examined (default 2d)");
  cmd->add_option("--probe", c.probe, "also report moment equalities up to this degree");
}

void emit(std::ostream& out, const Json& j, bool json) {
  if (json)
    out << j.dump(2) << "\n";
  else
    out << render_text(j);
}

std::vector<exact::Rational> parse_list(const std::string& text) {
  std::vector<exact::Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(exact::parse_rational(item));
  return out;
}

std::vector<exact::Rational> load_moments(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
  if (!j.is_array()) throw Error(ErrorKind::ParseError, path + ": expected a JSON list of rationals");
  std::vector<exact::Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].is_string())
      out.push_back(exact::parse_rational(j[i].get<std::string>()));
    else if (j[i].is_number_integer())
      out.push_back(exact::Rational(j[i].get<long>()));
    else
      throw Error(ErrorKind::ParseError, path + ": entry " + std::to_string(i) + " must be a rational string");
  }
  return out;
}

int cmd_analyze(const Common& c, std::ostream& out) {
  const auto a = analyze_input(load_input(c.family, c.params, c.file));
  const auto rep = analyze_report(a, c.t_max, c.probe);
  emit(out, rep.json, c.json);
  return rep.ok ? 0 : kViolation;
}

int cmd_strength(const Common& c, std::ostream& out) {
  const auto a = analyze_input(load_input(c.family, c.params, c.file));
  Json j;
  j["source"] = a.source;
  j["scheme"] = scheme_json(a);
  Json ords = Json::array();
  bool ok = true;
  for (const auto& ord : a.orderings) {
    Json o = weights_json(ord);
    auto s = strength_section(a, ord, c.t_max, c.probe);
    ok = ok && s.ok;
    o["strength"] = s.json;
    ords.push_back(std::move(o));
  }
  j["orderings"] = ords;
  j["ok"] = ok;
  emit(out, j, c.json);
  return ok ? 0 : kViolation;
}

int cmd_derived(const Common& c, std::optional<std::size_t> cls, std::ostream& out) {
  const auto a = analyze_input(load_input(c.family, c.params, c.file));
  if (cls && (*cls == 0 || *cls > a.scheme.d)) throw Error(ErrorKind::IndexOutOfRange, "class " + std::to_string(*cls));
  Json j;
  j["source"] = a.source;
  j["scheme"] = scheme_json(a);
  Json ords = Json::array();
  bool ok = true;
  for (const auto& ord : a.orderings) {
    Json o = weights_json(ord);
    auto s = derived_section(a, ord, cls, c.t_max);
    ok = ok && s.ok;
    o["derived"] = s.json;
    o["bound_check"] = bound_json(derived::pq_strength_bound_check(a.scheme, ord));
    ords.push_back(std::move(o));
  }
  j["orderings"] = ords;
  j["ok"] = ok;
  emit(out, j, c.json);
  return ok ? 0 : kViolation;
}

std::string render_catalan(const Json& j) {
  std::ostringstream o;
  o << "d = " << j["d"].get<std::size_t>() << ", m = " << j["m"].get<std::string>() << "\n";
  std::size_t n = 0;
  for (const auto& row : j["f"]) {
    o << "f_" << n++ << ":";
    for (const auto& v : row) o << " " << v.get<std::string>();
    o << "\n";
  }
  return o.str();
}

int cmd_catalan(const Common& c, std::size_t ordering, const std::string& a_text, const std::string& c_text, const std::string& m_text,
                std::ostream& out) {
  catalan::WeightTriple w;
  Json j;
  if (!a_text.empty() || !c_text.empty() || !m_text.empty()) {
    if (!c.family.empty() || !c.file.empty()) throw Error(ErrorKind::ParseError, "give either a scheme or --a/--c/--m");
    if (a_text.empty() || c_text.empty() || m_text.empty()) throw Error(ErrorKind::ParseError, "--a, --c and --m go together");
    w = catalan::make_weights(parse_list(a_text), parse_list(c_text), exact::parse_rational(m_text));
    j = catalan_json(w);
  } else {
    const auto a = analyze_input(load_input(c.family, c.params, c.file));
    if (ordering >= a.orderings.size())
      throw Error(ErrorKind::IndexOutOfRange, "ordering " + std::to_string(ordering) + " of " + std::to_string(a.orderings.size()));
    j = catalan_json(designs::weight_triple(a.orderings[ordering]));
    j["source"] = a.source;
    j["perm"] = a.orderings[ordering].perm;
  }
  if (c.json)
    out << j.dump(2) << "\n";
  else
    out << render_catalan(j);
  return 0;
}

int cmd_recover(const std::string& path, const std::string& m_text, bool json, std::ostream& out) {
  const auto moments = load_moments(path);
  const auto m = exact::parse_rational(m_text);
  const auto rec = catalan::recover_weights(moments, m);
  Json j;
  j["t"] = moments.size();
  j["m"] = str(m);
  Json a = Json::array(), cc = Json::array();
  for (const auto& v : rec.a) a.push_back(str(v));
  for (const auto& v : rec.c) cc.push_back(str(v));
  j["a_star"] = a;
  j["c_star"] = cc;
  if (json) {
    out << j.dump(2) << "\n";
  } else {
    out << "t = " << moments.size() << ", m = " << str(m) << "\n";
    for (std::size_t i = 0; i < rec.a.size(); ++i) out << "a_" << i << "* = " << str(rec.a[i]) << "\n";
    for (std::size_t i = 1; i < rec.c.size(); ++i) out << "c_" << i << "* = " << str(rec.c[i]) << "\n";
  }
  return 0;
}

int cmd_verify(const VerifyOptions& opts, bool json, std::ostream& out) {
  if (!json) out << "seed " << opts.seed << ", " << opts.random_triples << " random triples\n";
  bool ok = true;
  Json results = Json::array();
  run_verify(opts, [&](const PropertyOutcome& r) {
    ok = ok && r.pass;
    if (json)
      results.push_back({{"property", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    else
      out << (r.pass ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : "  " + r.detail) << "\n" << std::flush;
  });
  if (json) out << Json{{"seed", opts.seed}, {"random_triples", opts.random_triples}, {"results", results}, {"ok", ok}}.dump(2) << "\n";
  return ok ? 0 : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Krein parameters, Q-polynomial orderings and spherical design strength of association schemes", "schemekit"};
  app.require_subcommand(1);
  Common common;

  auto* analyze = app.add_subcommand("analyze", "full report: scheme, orderings, strengths, derived designs, bound check");
  add_source(analyze, common);
  add_tmax(analyze, common);

  auto* strength = app.add_subcommand("strength", "design strength by the moment and Krein routes");
  add_source(strength, common);
  add_tmax(strength, common);

  std::optional<std::size_t> cls;
  auto* derived_cmd = app.add_subcommand("derived", "derived designs of every class");
  add_source(derived_cmd, common);
  derived_cmd->add_option("--t-max", common.t_max, "largest degree examined (default 2d)");
  derived_cmd->add_option("--class", cls, "only this class");

  std::size_t ordering = 0;
  std::string a_text, c_text, m_text;
  auto* catalan_cmd = app.add_subcommand("catalan", "dump the Catalan matrix f_{n,k}");
  add_source(catalan_cmd, common);
  catalan_cmd->add_option("--ordering", ordering, "index of the Q-polynomial ordering");
  catalan_cmd->add_option("--a", a_text, "a_0*,..,a_d* instead of a scheme");
  catalan_cmd->add_option("--c", c_text, "c_0*,..,c_d*");
  catalan_cmd->add_option("--m", m_text, "m");

  std::string moments_path;
  auto* recover = app.add_subcommand("recover", "recover a*, c* from B_1..B_t");
  recover->add_option("moments", moments_path, "JSON list of B_1..B_t as rational strings")->required();
  recover->add_option("--m", m_text, "first multiplicity m")->required();
  recover->add_flag("--json", common.json, "machine-readable output");

  VerifyOptions vopts;
  std::vector<std::string> only;
  auto* verify = app.add_subcommand("verify", "run the invariant suite over the corpus");
  verify->add_option("--seed", vopts.seed, "seed for random weight triples");
  verify->add_option("--random-triples", vopts.random_triples, "random triples per randomized property");
  verify->add_option("--only", only, "run only these properties")->delimiter(',');
  verify->add_flag("--json", common.json, "machine-readable output");

  std::vector<std::string> argv_storage{"schemekit"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(common, out);
    if (*strength) return cmd_strength(common, out);
    if (*derived_cmd) return cmd_derived(common, cls, out);
    if (*catalan_cmd) return cmd_catalan(common, ordering, a_text, c_text, m_text, out);
    if (*recover) return cmd_recover(moments_path, m_text, common.json, out);
    if (*verify) {
      vopts.only.insert(only.begin(), only.end());
      return cmd_verify(vopts, common.json, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kViolation;
  }
  return kInputError;
}

}  // namespace schemekit::cli
