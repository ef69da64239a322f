#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "schemekit/derived.hpp"
#include "schemekit/generators.hpp"

namespace schemekit::cli {

using Json = nlohmann::ordered_json;

std::string str(const exact::Rational& q);
std::string str(const exact::Scalar& s);

struct Input {
  std::string source;
  scheme::RelationPartition relations;
};

// Exactly one of family or file must be given.
Input load_input(const std::string& family, const std::string& params, const std::string& file);

// Everything the commands report on, computed once.
struct Analysis {
  std::string source;
  scheme::SchemeCore scheme;
  scheme::KreinTensor krein;
  std::vector<qpoly::QPolyOrdering> orderings;
};
Analysis analyze_input(const Input& in);

Json scheme_json(const Analysis& a);
Json strength_json(const designs::StrengthReport& r);
Json weights_json(const qpoly::QPolyOrdering& ord);

struct Section {
  Json json;
  bool ok = true;  // false on any cross-route disagreement
};
// t_max = 0 means 2d; probe extends the moment residuals past t_max.
Section strength_section(const Analysis& a, const qpoly::QPolyOrdering& ord, std::size_t t_max, std::size_t probe);
Section derived_section(const Analysis& a, const qpoly::QPolyOrdering& ord, std::optional<std::size_t> only_class, std::size_t t_max);
Json bound_json(const derived::BoundReport& b);
Json catalan_json(const catalan::WeightTriple& w);

// Full report: scheme, then per ordering weights, Catalan numbers,
// strengths, derived designs and the bound check.
Section analyze_report(const Analysis& a, std::size_t t_max, std::size_t probe);

// Human-readable rendering of the JSON reports above.
std::string render_text(const Json& report);

}  // namespace schemekit::cli
