#include "subadd/products.hpp"

#include "subadd/errors.hpp"

namespace subadd {

std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::tensor: return "tensor";
    case ProductKind::extended_tensor: return "extended_tensor";
    case ProductKind::disjunctive: return "disjunctive";
    case ProductKind::lexicographic: return "lexicographic";
  }
  return "?";
}

ProductKind parse_product_kind(std::string_view name) {
  if (name == "tensor") return ProductKind::tensor;
  if (name == "extended_tensor" || name == "extended-tensor") return ProductKind::extended_tensor;
  if (name == "disjunctive") return ProductKind::disjunctive;
  if (name == "lexicographic") return ProductKind::lexicographic;
  throw InvalidInput("unknown product kind '" + std::string(name) + "'");
}

Graph product(ProductKind kind, const Graph& g, const Graph& h) {
  const int nh = h.order();
  return Graph::from_predicate(g.order() * nh, [&](int x, int y) {
    int u = x / nh, a = x % nh;
    int v = y / nh, b = y % nh;
    bool guv = u != v && g.adjacent(u, v);
    bool hab = a != b && h.adjacent(a, b);
    switch (kind) {
      case ProductKind::tensor: return guv && hab;
      case ProductKind::extended_tensor: return (guv || u == v) && hab;
      case ProductKind::disjunctive: return guv || hab;
      case ProductKind::lexicographic: return guv || (u == v && hab);
    }
    return false;
  });
}

Poset extended_tensor_poset(const Graph& g, const Poset& p) {
  if (!p.height_two()) throw InvalidInput("extended tensor product needs a height-two poset");
  const int np = p.order();
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (u != v && !g.adjacent(u, v)) continue;
      for (const Edge& e : p.edges()) edges.push_back({u * np + e.u, v * np + e.v});
    }
  }
  return validate_poset(edges, g.order() * np);
}

namespace {

Poset double_cover(const Graph& g, bool extended) {
  const int n = g.order();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    if (extended) edges.push_back({u, n + u});
    for (auto v = g.neighbors(u).find_first(); v != Bitset::npos; v = g.neighbors(u).find_next(v)) {
      edges.push_back({u, n + static_cast<int>(v)});
    }
  }
  return validate_poset(edges, 2 * n);
}

}  // namespace

Poset bip(const Graph& g) { return double_cover(g, false); }
Poset bip_e(const Graph& g) { return double_cover(g, true); }

Graph undirected_view(const Poset& p) {
  return Graph::from_predicate(p.order(), [&](int x, int y) { return p.comparable(x, y); });
}

Graph k_fold(ProductKind kind, const Graph& g, int k, std::uint64_t cap) {
  if (k < 1) throw InvalidInput("k must be positive");
  std::uint64_t required = 1;
  for (int i = 0; i < k; ++i) {
    required *= static_cast<std::uint64_t>(g.order());
    if (required > cap) throw CapExceeded("k-fold product vertex count", required, cap);
  }
  Graph result = g;
  for (int i = 1; i < k; ++i) result = product(kind, result, g);
  return result;
}

Graph complete(int n) {
  return Graph::from_predicate(n, [](int, int) { return true; });
}

Graph empty(int n) {
  return Graph::from_predicate(n, [](int, int) { return false; });
}

Graph path(int n) {
  return Graph::from_predicate(n, [](int x, int y) { return y == x + 1; });
}

Graph cycle(int n) {
  if (n < 3) throw InvalidInput("a cycle needs at least 3 vertices");
  return Graph::from_predicate(n, [n](int x, int y) { return y == x + 1 || (x == 0 && y == n - 1); });
}

Poset complete_bipartite_poset(int size_u, int size_v) {
  std::vector<int> side(size_u, 0);
  side.resize(size_u + size_v, 1);
  return complete_bipartite_poset(side);
}

Poset complete_bipartite_poset(std::span<const int> side) {
  const int n = static_cast<int>(side.size());
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (side[x] == 0 && side[y] == 1) edges.push_back({x, y});
    }
  }
  return validate_poset(edges, n);
}

Poset chain(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return validate_poset(edges, n);
}

Poset antichain(int n) { return validate_poset({}, n); }

}  // namespace subadd
