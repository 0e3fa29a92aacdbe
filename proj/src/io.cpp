#include "subadd/io.hpp"

#include <fstream>
#include <set>

#include "subadd/errors.hpp"

namespace subadd {
namespace json_detail {

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + "." + key, "missing field");
  return *it;
}

void expect_type(const Json& doc, const std::string& type, const std::string& path) {
  const Json& t = field(doc, "type", path);
  if (!t.is_string() || t.get<std::string>() != type) {
    throw ParseError(path + ".type", "expected \"" + type + "\"");
  }
}

long long as_integer(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ParseError(path, "expected an integer");
  return v.get<long long>();
}

int as_index(const Json& v, int bound, const std::string& path) {
  long long x = as_integer(v, path);
  if (x < 0 || x >= bound) {
    throw ParseError(path, "vertex " + std::to_string(x) + " out of range [0," +
                               std::to_string(bound) + ")");
  }
  return static_cast<int>(x);
}

Rational as_rational(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) throw ParseError(path, "expected a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const InvalidInput& e) {
    throw ParseError(path, e.what());
  }
}

ExtCoord as_coord(const Json& v, const std::string& path) {
  if (v.is_string() && (v.get<std::string>() == "inf" || v.get<std::string>() == "+inf")) {
    return ExtCoord::infinity();
  }
  return ExtCoord(as_rational(v, path));
}

}  // namespace json_detail

using namespace json_detail;

namespace {

int read_count(const Json& doc, const std::string& key) {
  long long n = as_integer(field(doc, key, "$"), "$." + key);
  if (n < 0) throw ParseError("$." + key, "must be non-negative");
  return static_cast<int>(n);
}

std::vector<Edge> read_pairs(const Json& doc, const std::string& key, int n, bool ordered) {
  const Json& arr = field(doc, key, "$");
  if (!arr.is_array()) throw ParseError("$." + key, "expected an array");
  std::vector<Edge> out;
  std::set<Edge> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string path = "$." + key + "[" + std::to_string(i) + "]";
    const Json& e = arr[i];
    if (!e.is_array() || e.size() != 2) throw ParseError(path, "expected a pair");
    int u = as_index(e[0], n, path + "[0]");
    int v = as_index(e[1], n, path + "[1]");
    if (u == v) throw ParseError(path, "self-loop at " + std::to_string(u));
    Edge key_edge = ordered ? Edge{u, v} : Edge{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key_edge).second) throw ParseError(path, "duplicate edge");
    out.push_back({u, v});
  }
  return out;
}

Json pairs_json(const std::vector<Edge>& edges) {
  Json arr = Json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

}  // namespace

Graph read_graph(const Json& doc) {
  expect_type(doc, "graph", "$");
  int n = read_count(doc, "n");
  return Graph::from_edges(n, read_pairs(doc, "edges", n, false));
}

Poset read_poset(const Json& doc) {
  expect_type(doc, "poset", "$");
  int n = read_count(doc, "n");
  auto edges = read_pairs(doc, "edges", n, true);
  try {
    return validate_poset(edges, n);
  } catch (const InvalidInput& e) {
    throw ParseError("$.edges", e.what());
  }
}

TotalOrder read_order(const Json& doc) {
  expect_type(doc, "order", "$");
  const Json& arr = field(doc, "sigma", "$");
  if (!arr.is_array()) throw ParseError("$.sigma", "expected an array");
  const int n = static_cast<int>(arr.size());
  std::vector<int> ranks(n);
  std::vector<bool> taken(n, false);
  for (int v = 0; v < n; ++v) {
    std::string path = "$.sigma[" + std::to_string(v) + "]";
    long long r = as_integer(arr[v], path);
    if (r < 1 || r > n) throw ParseError(path, "rank must lie in 1.." + std::to_string(n));
    if (taken[r - 1]) throw ParseError(path, "rank " + std::to_string(r) + " repeated");
    taken[r - 1] = true;
    ranks[v] = static_cast<int>(r - 1);
  }
  return TotalOrder::from_ranks(std::move(ranks));
}

Matching read_matching(const Json& doc) {
  expect_type(doc, "matching", "$");
  const Json& arr = field(doc, "pairs", "$");
  if (!arr.is_array()) throw ParseError("$.pairs", "expected an array");
  Matching m;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string path = "$.pairs[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) throw ParseError(path, "expected a pair");
    long long u = as_integer(arr[i][0], path + "[0]");
    long long v = as_integer(arr[i][1], path + "[1]");
    if (u < 0 || v < 0) throw ParseError(path, "negative vertex");
    m.pairs.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  return m;
}

Realizer read_realizer(const Json& doc) {
  expect_type(doc, "realizer", "$");
  Realizer phi;
  phi.d = read_count(doc, "d");
  const Json& arr = field(doc, "coords", "$");
  if (!arr.is_array()) throw ParseError("$.coords", "expected an array");
  for (std::size_t v = 0; v < arr.size(); ++v) {
    std::string path = "$.coords[" + std::to_string(v) + "]";
    if (!arr[v].is_array()) throw ParseError(path, "expected an array");
    if (static_cast<int>(arr[v].size()) != phi.d) {
      throw ParseError(path, "expected " + std::to_string(phi.d) + " coordinates");
    }
    Point p;
    for (std::size_t j = 0; j < arr[v].size(); ++j) {
      p.push_back(as_coord(arr[v][j], path + "[" + std::to_string(j) + "]"));
    }
    phi.coords.push_back(std::move(p));
  }
  return phi;
}

Json write_graph(const Graph& g) {
  return {{"type", "graph"}, {"n", g.order()}, {"edges", pairs_json(g.edges())}};
}

Json write_poset(const Poset& p) {
  return {{"type", "poset"}, {"n", p.order()}, {"edges", pairs_json(p.edges())}};
}

Json write_order(const TotalOrder& sigma) {
  Json arr = Json::array();
  for (int r : sigma.ranks()) arr.push_back(r + 1);
  return {{"type", "order"}, {"sigma", arr}};
}

Json write_matching(const Matching& m) {
  return {{"type", "matching"}, {"pairs", pairs_json(m.pairs)}};
}

Json write_realizer(const Realizer& phi) {
  Json coords = Json::array();
  for (const Point& p : phi.coords) {
    Json row = Json::array();
    for (const ExtCoord& c : p) row.push_back(format_coord(c));
    coords.push_back(row);
  }
  return {{"type", "realizer"}, {"d", phi.d}, {"coords", coords}};
}

Json write_vertex_list(std::span<const int> vertices) {
  return Json(std::vector<int>(vertices.begin(), vertices.end()));
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string(), e.what());
  }
}

void save_json(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << doc.dump(2) << "\n";
}

}  // namespace subadd
