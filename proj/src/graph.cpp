#include "subadd/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "subadd/errors.hpp"

namespace subadd {
namespace {

std::string pair_text(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw InvalidInput("negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, Bitset(n));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw InvalidInput("edge " + pair_text(e.u, e.v) + " out of range for n=" + std::to_string(n));
    }
    if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
    if (g.adj_[e.u][e.v]) throw InvalidInput("duplicate edge " + pair_text(e.u, e.v));
    g.adj_[e.u][e.v] = true;
    g.adj_[e.v][e.u] = true;
    g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

Graph Graph::from_predicate(int n, const std::function<bool(int, int)>& adjacent) {
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, Bitset(n));
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!adjacent(x, y)) continue;
      g.adj_[x][y] = true;
      g.adj_[y][x] = true;
      g.edges_.push_back({x, y});
    }
  }
  return g;
}

Poset validate_poset(std::span<const Edge> edges, int n) {
  if (n < 0) throw InvalidInput("negative element count");
  Poset p;
  p.n_ = n;
  p.up_.assign(n, Bitset(n));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw InvalidInput("pair " + pair_text(e.u, e.v) + " out of range for n=" + std::to_string(n));
    }
    if (e.u == e.v) throw InvalidInput("self-loop at element " + std::to_string(e.u));
    p.up_[e.u][e.v] = true;
  }
  // Warshall on bitset rows.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (p.up_[i][k]) p.up_[i] |= p.up_[k];
    }
  }
  for (int i = 0; i < n; ++i) {
    if (p.up_[i][i]) throw InvalidInput("cycle through element " + std::to_string(i));
  }
  p.down_.assign(n, Bitset(n));
  for (int i = 0; i < n; ++i) {
    for (auto j = p.up_[i].find_first(); j != Bitset::npos; j = p.up_[i].find_next(j)) {
      p.down_[j][i] = true;
      p.edges_.push_back({i, static_cast<int>(j)});
    }
  }
  for (int i = 0; i < n; ++i) {
    if (p.down_[i].any() && p.up_[i].any()) p.height_two_ = false;
  }
  return p;
}

TotalOrder TotalOrder::from_ranks(std::vector<int> ranks) {
  const int n = static_cast<int>(ranks.size());
  TotalOrder t;
  t.seq_.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int r = ranks[v];
    if (r < 0 || r >= n || t.seq_[r] != -1) {
      throw InvalidInput("order is not a bijection onto ranks (vertex " + std::to_string(v) + ")");
    }
    t.seq_[r] = v;
  }
  t.rank_ = std::move(ranks);
  return t;
}

TotalOrder TotalOrder::from_sequence(std::span<const int> sequence) {
  const int n = static_cast<int>(sequence.size());
  std::vector<int> ranks(n, -1);
  for (int r = 0; r < n; ++r) {
    int v = sequence[r];
    if (v < 0 || v >= n || ranks[v] != -1) {
      throw InvalidInput("sequence is not a permutation (position " + std::to_string(r) + ")");
    }
    ranks[v] = r;
  }
  return from_ranks(std::move(ranks));
}

TotalOrder TotalOrder::identity(int n) {
  std::vector<int> ranks(n);
  std::iota(ranks.begin(), ranks.end(), 0);
  return from_ranks(std::move(ranks));
}

std::optional<std::string> check_matching(const Graph& g, const Matching& m) {
  std::vector<bool> used(g.order(), false);
  for (const Edge& e : m.pairs) {
    if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order()) {
      return "pair " + pair_text(e.u, e.v) + " out of range";
    }
    if (e.u == e.v || !g.adjacent(e.u, e.v)) return "pair " + pair_text(e.u, e.v) + " is not an edge";
    if (used[e.u] || used[e.v]) return "pair " + pair_text(e.u, e.v) + " reuses a vertex";
    used[e.u] = used[e.v] = true;
  }
  return std::nullopt;
}

std::optional<std::string> check_induced_matching(const Graph& g, const Matching& m) {
  if (auto err = check_matching(g, m)) return err;
  for (std::size_t i = 0; i < m.pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < m.pairs.size(); ++j) {
      const Edge& a = m.pairs[i];
      const Edge& b = m.pairs[j];
      for (int x : {a.u, a.v}) {
        for (int y : {b.u, b.v}) {
          if (g.adjacent(x, y)) {
            return "edges " + pair_text(a.u, a.v) + " and " + pair_text(b.u, b.v) +
                   " are joined by " + pair_text(x, y);
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_semi_induced_matching(const Graph& g, const Matching& m,
                                                       const TotalOrder& sigma) {
  if (sigma.size() != g.order()) return "order size does not match the graph";
  if (auto err = check_matching(g, m)) return err;
  std::vector<Edge> oriented;
  for (Edge e : m.pairs) {
    if (sigma.rank(e.v) < sigma.rank(e.u)) std::swap(e.u, e.v);
    oriented.push_back(e);
  }
  std::sort(oriented.begin(), oriented.end(), [&](const Edge& a, const Edge& b) {
    return sigma.rank(a.u) < sigma.rank(b.u);
  });
  for (std::size_t i = 0; i < oriented.size(); ++i) {
    for (std::size_t j = i + 1; j < oriented.size(); ++j) {
      int ui = oriented[i].u;
      for (int y : {oriented[j].u, oriented[j].v}) {
        if (g.adjacent(ui, y)) {
          return "earlier edge " + pair_text(ui, oriented[i].v) + " has its first endpoint joined to " +
                 std::to_string(y) + " of later edge " + pair_text(oriented[j].u, oriented[j].v);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_independent_set(const Graph& g, std::span<const int> set) {
  std::vector<bool> seen(g.order(), false);
  for (int v : set) {
    if (v < 0 || v >= g.order()) return "vertex " + std::to_string(v) + " out of range";
    if (seen[v]) return "vertex " + std::to_string(v) + " repeated";
    seen[v] = true;
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (g.adjacent(set[i], set[j])) return "edge " + pair_text(set[i], set[j]) + " inside the set";
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_proper_coloring(const Graph& g, std::span<const int> color) {
  if (static_cast<int>(color.size()) != g.order()) return "coloring size does not match the graph";
  for (int c : color) {
    if (c < 0) return "negative color";
  }
  for (const Edge& e : g.edges()) {
    if (color[e.u] == color[e.v]) return "edge " + pair_text(e.u, e.v) + " is monochromatic";
  }
  return std::nullopt;
}

bool dominates_strictly(const Point& p, const Point& q) {
  bool strict = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto c = p[i] <=> q[i];
    if (c > 0) return false;
    if (c < 0) strict = true;
  }
  return strict;
}

std::string RealizerViolation::describe() const {
  switch (kind) {
    case Kind::not_injective:
      return "vertices " + std::to_string(u) + " and " + std::to_string(v) + " share a point";
    case Kind::missing_dominance:
      return "pair " + pair_text(u, v) + " is related but not strictly dominated";
    case Kind::spurious_dominance:
      return "pair " + pair_text(u, v) + " is strictly dominated but not related";
  }
  return {};
}

RealizerVerdict verify_realizer(const Poset& p, const Realizer& phi, RealizerCheck mode) {
  const int n = p.order();
  if (static_cast<int>(phi.coords.size()) != n) {
    throw InvalidInput("realizer covers " + std::to_string(phi.coords.size()) +
                       " vertices, poset has " + std::to_string(n));
  }
  if (phi.d < 0) throw InvalidInput("negative realizer dimension");
  if (phi.d == 0 && n >= 2) throw InvalidInput("dimension 0 cannot separate two or more vertices");
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(phi.coords[v].size()) != phi.d) {
      throw InvalidInput("vertex " + std::to_string(v) + " has " +
                         std::to_string(phi.coords[v].size()) + " coordinates, expected " +
                         std::to_string(phi.d));
    }
  }
  using Kind = RealizerViolation::Kind;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (mode == RealizerCheck::strict && u < v && phi.coords[u] == phi.coords[v]) {
        return {false, RealizerViolation{u, v, Kind::not_injective}};
      }
      bool dom = dominates_strictly(phi.coords[u], phi.coords[v]);
      bool rel = p.less(u, v);
      if (rel && !dom) return {false, RealizerViolation{u, v, Kind::missing_dominance}};
      if (!rel && dom) return {false, RealizerViolation{u, v, Kind::spurious_dominance}};
    }
  }
  return {};
}

}  // namespace subadd
