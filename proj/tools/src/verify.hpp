#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace schemekit::cli {

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t random_triples = 200;
  std::set<std::string> only;  // empty = all
};

struct PropertyOutcome {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<std::string> property_names();

// Runs the named properties over the generator corpus and seeded random
// weight triples; throws Error(ParseError) for an unknown name in `only`.
std::vector<PropertyOutcome> run_verify(const VerifyOptions& opts, const std::function<void(const PropertyOutcome&)>& on_result = {});

}  // namespace schemekit::cli
