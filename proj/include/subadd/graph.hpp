#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "subadd/rational.hpp"

namespace subadd {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Edges are stored with u < v and
// sorted.
class Graph {
 public:
  Graph() = default;
  // Rejects self-loops, out-of-range endpoints and duplicates (in either
  // orientation).
  static Graph from_edges(int n, std::span<const Edge> edges);
  // Includes {x, y} for every x < y with adjacent(x, y). The predicate must be
  // symmetric; only x < y is queried.
  static Graph from_predicate(int n, const std::function<bool(int, int)>& adjacent);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  bool adjacent(int u, int v) const { return adj_[u][v]; }
  const Bitset& neighbors(int u) const { return adj_[u]; }
  int degree(int u) const { return static_cast<int>(adj_[u].count()); }
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Bitset> adj_;
  std::vector<Edge> edges_;
};

// Strict partial order on 0..n-1, stored transitively closed.
class Poset {
 public:
  Poset() = default;

  int order() const { return n_; }
  bool less(int u, int v) const { return up_[u][v]; }
  bool comparable(int u, int v) const { return up_[u][v] || up_[v][u]; }
  // Strict up-set and down-set.
  const Bitset& above(int u) const { return up_[u]; }
  const Bitset& below(int u) const { return down_[u]; }
  bool minimal(int u) const { return down_[u].none(); }
  bool maximal(int u) const { return up_[u].none(); }
  bool height_two() const { return height_two_; }
  // All ordered pairs of the closed relation, sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend Poset validate_poset(std::span<const Edge> edges, int n);
  int n_ = 0;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<Edge> edges_;
  bool height_two_ = true;
};

// Transitive closure of a generating relation. Rejects out-of-range
// endpoints, self-loops and cycles.
Poset validate_poset(std::span<const Edge> edges, int n);

// Bijection vertex -> rank. Ranks are 0-based in memory and 1-based in files.
class TotalOrder {
 public:
  TotalOrder() = default;
  static TotalOrder from_ranks(std::vector<int> ranks);
  // sequence[r] is the vertex of rank r.
  static TotalOrder from_sequence(std::span<const int> sequence);
  static TotalOrder identity(int n);

  int size() const { return static_cast<int>(rank_.size()); }
  int rank(int v) const { return rank_[v]; }
  int at(int r) const { return seq_[r]; }
  const std::vector<int>& ranks() const { return rank_; }
  const std::vector<int>& sequence() const { return seq_; }

  friend bool operator==(const TotalOrder& a, const TotalOrder& b) {
    return a.rank_ == b.rank_;
  }

 private:
  std::vector<int> rank_;
  std::vector<int> seq_;
};

struct Matching {
  std::vector<Edge> pairs;
  std::size_t size() const { return pairs.size(); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

// Each returns a description of the first violation, or nullopt.
std::optional<std::string> check_matching(const Graph& g, const Matching& m);
std::optional<std::string> check_induced_matching(const Graph& g, const Matching& m);
// Edges are oriented by sigma and sorted by their first endpoint; for i < j
// neither u_i u_j nor u_i v_j may be an edge.
std::optional<std::string> check_semi_induced_matching(const Graph& g, const Matching& m,
                                                       const TotalOrder& sigma);
std::optional<std::string> check_independent_set(const Graph& g, std::span<const int> set);
std::optional<std::string> check_proper_coloring(const Graph& g, std::span<const int> color);

using Point = std::vector<ExtCoord>;

struct Realizer {
  int d = 0;
  std::vector<Point> coords;
  friend bool operator==(const Realizer&, const Realizer&) = default;
};

// All components <= and at least one <.
bool dominates_strictly(const Point& p, const Point& q);

enum class RealizerCheck { strict, relaxed };

struct RealizerViolation {
  enum class Kind { not_injective, missing_dominance, spurious_dominance };
  int u = 0;
  int v = 0;
  Kind kind = Kind::not_injective;
  std::string describe() const;
};

struct RealizerVerdict {
  bool ok = true;
  std::optional<RealizerViolation> violation;
  explicit operator bool() const { return ok; }
};

// Checks injectivity (strict mode only) and uv in E(P) <=> phi(u) < phi(v) for
// every ordered pair of distinct vertices. Throws InvalidInput on size
// mismatch, ragged coordinates, or d == 0 with two or more vertices.
RealizerVerdict verify_realizer(const Poset& p, const Realizer& phi,
                                RealizerCheck mode = RealizerCheck::strict);

}  // namespace subadd
