#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "schemekit/scheme.hpp"

namespace schemekit::generators {

using scheme::RelationPartition;

inline constexpr std::size_t kMaxVertices = 4096;

// Named family with integer parameters, e.g. {"hamming", {{"d", 3}, {"q", 2}}}.
struct SchemeSpec {
  std::string family;
  std::map<std::string, long> params;

  std::string label() const;  // "hamming(d=3,q=2)"
  friend bool operator==(const SchemeSpec&, const SchemeSpec&) = default;
};

RelationPartition complete(long n);
RelationPartition cycle(long n);
RelationPartition hamming(long d, long q);
RelationPartition johnson(long v, long k);
RelationPartition petersen();
RelationPartition cocktail_party(long n);
RelationPartition icosahedron();

// Dispatches on spec.family. Throws Error(UnsupportedParameters).
RelationPartition generate(const SchemeSpec& spec);

// "d=3,q=2" -> {{"d",3},{"q",2}}; throws Error(ParseError).
SchemeSpec parse_spec(std::string_view family, std::string_view params);

// Accepts either {"n","d","relations"} or {"family","params"}.
// Throws Error(ParseError) with line/field context or Error(StructureError).
RelationPartition parse_relation_json(std::string_view text);
RelationPartition load_relation_file(const std::filesystem::path& path);
std::string serialize(const RelationPartition& rp);

// The families and parameters the verification suite runs over.
std::vector<SchemeSpec> corpus();

}  // namespace schemekit::generators
