#pragma once

#include <functional>
#include <string>

#include <gtest/gtest.h>

#include "schemekit/derived.hpp"
#include "schemekit/designs.hpp"
#include "schemekit/error.hpp"
#include "schemekit/generators.hpp"
#include "schemekit/qpoly.hpp"
#include "schemekit/scheme.hpp"

namespace testing_util {

using namespace schemekit;
using namespace schemekit::scheme;
using namespace schemekit::qpoly;

struct Analysed {
  SchemeCore sc;
  KreinTensor kt;
  std::vector<QPolyOrdering> orderings;
};

inline Analysed analyse(const RelationPartition& rp) {
  Analysed a;
  a.sc = validate_scheme(rp);
  a.kt = krein_parameters(a.sc);
  a.orderings = find_qpoly_orderings(a.kt, a.sc);
  return a;
}

inline Analysed analyse(const std::string& family, const std::string& params = "") {
  return analyse(generators::generate(generators::parse_spec(family, params)));
}

// The ordering whose first idempotent has the given multiplicity.
inline const QPolyOrdering& ordering_with_m(const Analysed& a, long m) {
  for (const auto& o : a.orderings)
    if (o.m == m) return o;
  throw std::runtime_error("no ordering with m = " + std::to_string(m));
}

inline ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::runtime_error("no schemekit::Error thrown");
}

inline std::string detail_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.detail();
  }
  throw std::runtime_error("no schemekit::Error thrown");
}

}  // namespace testing_util
