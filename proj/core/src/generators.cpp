#include "schemekit/generators.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include <nlohmann/json.hpp>

#include "schemekit/error.hpp"

namespace schemekit::generators {

namespace {

using nlohmann::json;

[[noreturn]] void unsupported(const std::string& what) { throw Error(ErrorKind::UnsupportedParameters, what); }

void check_size(const std::string& family, long n) {
  if (n > static_cast<long>(kMaxVertices))
    unsupported(family + ": " + std::to_string(n) + " vertices exceeds the cap of " + std::to_string(kMaxVertices));
}

// Distance partition of a connected graph.
RelationPartition from_graph(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  RelationPartition rp;
  rp.n = n;
  rp.rel.assign(n * n, -1);
  int diameter = 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<std::size_t> q;
    rp.rel[s * n + s] = 0;
    q.push(s);
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      for (std::size_t y : adj[x])
        if (rp.rel[s * n + y] < 0) {
          rp.rel[s * n + y] = rp.rel[s * n + x] + 1;
          diameter = std::max(diameter, rp.rel[s * n + y]);
          q.push(y);
        }
    }
  }
  if (std::find(rp.rel.begin(), rp.rel.end(), -1) != rp.rel.end()) throw std::logic_error("from_graph: disconnected");
  rp.d = diameter;
  return rp;
}

template <class F>
RelationPartition tabulate(std::size_t n, std::size_t d, F&& f) {
  RelationPartition rp;
  rp.n = n;
  rp.d = d;
  rp.rel.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rp.rel[x * n + y] = f(x, y);
  return rp;
}

std::vector<std::vector<int>> subsets(int v, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == v - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  int c = 0;
  for (int x : a) c += std::binary_search(b.begin(), b.end(), x) ? 1 : 0;
  return c;
}

long param(const SchemeSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) unsupported(spec.family + ": missing parameter '" + key + "'");
  return it->second;
}

void expect_params(const SchemeSpec& spec, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : spec.params)
    if (std::none_of(keys.begin(), keys.end(), [&](const char* e) { return k == e; }))
      unsupported(spec.family + ": unknown parameter '" + k + "'");
}

std::string line_context(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }
[[noreturn]] void structure_error(const std::string& what) { throw Error(ErrorKind::StructureError, what); }

long integer_field(const json& j, const char* name) {
  if (!j.contains(name)) parse_error(std::string("missing field '") + name + "'");
  const auto& v = j.at(name);
  if (!v.is_number_integer()) parse_error(std::string("field '") + name + "' must be an integer");
  return v.get<long>();
}

}  // namespace

std::string SchemeSpec::label() const {
  std::string out = family;
  if (params.empty()) return out;
  out += '(';
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) out += ',';
    first = false;
    out += k + "=" + std::to_string(v);
  }
  return out + ')';
}

RelationPartition complete(long n) {
  if (n < 2) unsupported("complete: n >= 2 required");
  check_size("complete", n);
  return tabulate(n, 1, [](std::size_t x, std::size_t y) { return x == y ? 0 : 1; });
}

RelationPartition cycle(long n) {
  if (n < 3) unsupported("cycle: n >= 3 required");
  check_size("cycle", n);
  return tabulate(n, n / 2, [n](std::size_t x, std::size_t y) {
    const long diff = std::labs(static_cast<long>(x) - static_cast<long>(y));
    return static_cast<int>(std::min(diff, n - diff));
  });
}

RelationPartition hamming(long d, long q) {
  if (d < 1 || q < 2) unsupported("hamming: d >= 1 and q >= 2 required");
  long n = 1;
  for (long i = 0; i < d; ++i) {
    n *= q;
    check_size("hamming", n);
  }
  return tabulate(n, d, [d, q](std::size_t x, std::size_t y) {
    int dist = 0;
    for (long i = 0; i < d; ++i, x /= q, y /= q) dist += (x % q != y % q) ? 1 : 0;
    return dist;
  });
}

RelationPartition johnson(long v, long k) {
  if (!(v > k && k >= 1)) unsupported("johnson: v > k >= 1 required");
  long n = 1;
  for (long i = 1; i <= k; ++i) {
    n = n * (v - k + i) / i;
    check_size("johnson", n);
  }
  const auto sets = subsets(static_cast<int>(v), static_cast<int>(k));
  return tabulate(sets.size(), std::min(k, v - k), [&](std::size_t x, std::size_t y) {
    return static_cast<int>(k) - intersection_size(sets[x], sets[y]);
  });
}

RelationPartition petersen() {
  const auto sets = subsets(5, 2);
  return tabulate(sets.size(), 2, [&](std::size_t x, std::size_t y) {
    if (x == y) return 0;
    return intersection_size(sets[x], sets[y]) == 0 ? 1 : 2;
  });
}

RelationPartition cocktail_party(long n) {
  if (n < 2) unsupported("cocktail_party: n >= 2 required");
  check_size("cocktail_party", 2 * n);
  return tabulate(2 * n, 2, [](std::size_t x, std::size_t y) {
    if (x == y) return 0;
    return (x ^ 1) == y ? 2 : 1;
  });
}

RelationPartition icosahedron() {
  // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
  std::vector<std::vector<std::size_t>> adj(12);
  auto edge = [&](std::size_t a, std::size_t b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (std::size_t i = 0; i < 5; ++i) {
    edge(0, 1 + i);
    edge(1 + i, 1 + (i + 1) % 5);
    edge(6 + i, 6 + (i + 1) % 5);
    edge(11, 6 + i);
    edge(1 + i, 6 + i);
    edge(1 + i, 6 + (i + 1) % 5);
  }
  return from_graph(adj);
}

RelationPartition generate(const SchemeSpec& spec) {
  const auto& f = spec.family;
  if (f == "complete") {
    expect_params(spec, {"n"});
    return complete(param(spec, "n"));
  }
  if (f == "cycle") {
    expect_params(spec, {"n"});
    return cycle(param(spec, "n"));
  }
  if (f == "hamming") {
    expect_params(spec, {"d", "q"});
    return hamming(param(spec, "d"), param(spec, "q"));
  }
  if (f == "johnson") {
    expect_params(spec, {"v", "k"});
    return johnson(param(spec, "v"), param(spec, "k"));
  }
  if (f == "cocktail_party") {
    expect_params(spec, {"n"});
    return cocktail_party(param(spec, "n"));
  }
  if (f == "petersen") {
    expect_params(spec, {});
    return petersen();
  }
  if (f == "icosahedron") {
    expect_params(spec, {});
    return icosahedron();
  }
  unsupported("unknown family '" + f + "'");
}

SchemeSpec parse_spec(std::string_view family, std::string_view params) {
  SchemeSpec spec{std::string(family), {}};
  std::string item;
  std::stringstream ss{std::string(params)};
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) parse_error("parameter '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size() || value.empty()) parse_error("parameter '" + key + "' must be an integer");
    spec.params[key] = v;
  }
  return spec;
}

RelationPartition parse_relation_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(line_context(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!j.is_object()) parse_error("top level must be an object");
  if (j.contains("family")) {
    if (!j["family"].is_string()) parse_error("field 'family' must be a string");
    SchemeSpec spec{j["family"].get<std::string>(), {}};
    if (j.contains("params")) {
      if (!j["params"].is_object()) parse_error("field 'params' must be an object");
      for (const auto& [k, v] : j["params"].items()) {
        if (!v.is_number_integer()) parse_error("field 'params." + k + "' must be an integer");
        spec.params[k] = v.get<long>();
      }
    }
    return generate(spec);
  }
  const long n = integer_field(j, "n");
  const long d = integer_field(j, "d");
  if (n < 1 || d < 0) structure_error("n >= 1 and d >= 0 required");
  if (!j.contains("relations")) parse_error("missing field 'relations'");
  const auto& rows = j["relations"];
  if (!rows.is_array()) parse_error("field 'relations' must be an array of rows");
  if (static_cast<long>(rows.size()) != n)
    structure_error("relations has " + std::to_string(rows.size()) + " rows, expected n = " + std::to_string(n));
  RelationPartition rp;
  rp.n = n;
  rp.d = d;
  rp.rel.reserve(n * n);
  for (long x = 0; x < n; ++x) {
    const auto& row = rows[x];
    if (!row.is_array()) parse_error("relations[" + std::to_string(x) + "] must be an array");
    if (static_cast<long>(row.size()) != n)
      structure_error("relations[" + std::to_string(x) + "] has length " + std::to_string(row.size()) + ", expected " + std::to_string(n));
    for (long y = 0; y < n; ++y) {
      if (!row[y].is_number_integer())
        parse_error("relations[" + std::to_string(x) + "][" + std::to_string(y) + "] must be an integer");
      const long r = row[y].get<long>();
      if (r < 0 || r > d)
        structure_error("relations[" + std::to_string(x) + "][" + std::to_string(y) + "] = " + std::to_string(r) + " outside 0.." + std::to_string(d));
      rp.rel.push_back(static_cast<int>(r));
    }
  }
  return rp;
}

RelationPartition load_relation_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_relation_json(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.detail());
  }
}

std::string serialize(const RelationPartition& rp) {
  std::string out = "{\"n\": " + std::to_string(rp.n) + ", \"d\": " + std::to_string(rp.d) + ", \"relations\": [\n";
  for (std::size_t x = 0; x < rp.n; ++x) {
    out += "  [";
    for (std::size_t y = 0; y < rp.n; ++y) {
      if (y) out += ',';
      out += std::to_string(rp(x, y));
    }
    out += x + 1 < rp.n ? "],\n" : "]\n";
  }
  return out + "]}\n";
}

std::vector<SchemeSpec> corpus() {
  std::vector<SchemeSpec> out;
  for (long n : {3, 4, 5, 10}) out.push_back({"complete", {{"n", n}}});
  for (long n = 5; n <= 12; ++n) out.push_back({"cycle", {{"n", n}}});
  for (long d = 3; d <= 6; ++d) out.push_back({"hamming", {{"d", d}, {"q", 2}}});
  out.push_back({"johnson", {{"v", 5}, {"k", 2}}});
  out.push_back({"petersen", {}});
  for (long n : {3, 4, 5}) out.push_back({"cocktail_party", {{"n", n}}});
  out.push_back({"icosahedron", {}});
  return out;
}

}  // namespace schemekit::generators
