#include "subadd/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>

#include "subadd/errors.hpp"

namespace subadd {
namespace {

using Mask = std::uint64_t;

Mask bit(int i) { return Mask{1} << i; }

void require_cap(const char* what, int n, int cap) {
  if (n > cap) throw CapExceeded(what, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(cap));
}

// Branch and bound maximum clique with greedy coloring bounds.
class CliqueSearch {
 public:
  explicit CliqueSearch(const std::vector<Bitset>& adj) : adj_(adj) {}

  std::vector<int> run() {
    Bitset all(adj_.size());
    all.set();
    expand(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void expand(Bitset cand) {
    std::vector<int> order;
    std::vector<int> bound;
    color_sort(cand, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current_.size() + bound[i] <= best_.size()) return;
      int v = order[i];
      current_.push_back(v);
      Bitset next = cand & adj_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      cand.reset(v);
    }
  }

  void color_sort(Bitset uncolored, std::vector<int>& order, std::vector<int>& bound) const {
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset q = uncolored;
      for (auto v = q.find_first(); v != Bitset::npos; v = q.find_next(v)) {
        q &= ~adj_[v];
        uncolored.reset(v);
        order.push_back(static_cast<int>(v));
        bound.push_back(color);
      }
    }
  }

  const std::vector<Bitset>& adj_;
  std::vector<int> best_;
  std::vector<int> current_;
};

std::vector<int> max_clique(const std::vector<Bitset>& adj) {
  if (adj.empty()) return {};
  return CliqueSearch(adj).run();
}

// Maximum independent set of an explicit conflict relation.
std::vector<int> max_independent(int n, const std::function<bool(int, int)>& conflict) {
  std::vector<Bitset> compat(n, Bitset(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!conflict(i, j)) {
        compat[i][j] = true;
        compat[j][i] = true;
      }
    }
  }
  return max_clique(compat);
}

bool edges_joined(const Graph& g, const Edge& a, const Edge& b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v || g.adjacent(a.u, b.u) ||
         g.adjacent(a.u, b.v) || g.adjacent(a.v, b.u) || g.adjacent(a.v, b.v);
}

// DSATUR backtracking for k-colorability.
class Colorer {
 public:
  Colorer(const Graph& g, int k) : g_(g), k_(k), color_(g.order(), -1) {}

  bool run() { return step(0); }
  const std::vector<int>& color() const { return color_; }

 private:
  bool step(int colored) {
    const int n = g_.order();
    if (colored == n) return true;
    int pick = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color_[v] != -1) continue;
      int sat = std::popcount(used_by_neighbors(v));
      int deg = g_.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    Mask forbidden = used_by_neighbors(pick);
    int max_used = *std::max_element(color_.begin(), color_.end());
    for (int c = 0; c < k_ && c <= max_used + 1; ++c) {
      if (forbidden & bit(c)) continue;
      color_[pick] = c;
      if (step(colored + 1)) return true;
    }
    color_[pick] = -1;
    return false;
  }

  Mask used_by_neighbors(int v) const {
    Mask m = 0;
    const Bitset& nb = g_.neighbors(v);
    for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
      if (color_[w] >= 0) m |= bit(color_[w]);
    }
    return m;
  }

  const Graph& g_;
  int k_;
  std::vector<int> color_;
};

}  // namespace

VertexSetResult alpha(const Graph& g, const SolverCaps& caps) {
  require_cap("alpha vertex count", g.order(), caps.alpha);
  const int n = g.order();
  std::vector<Bitset> comp(n, Bitset(n));
  for (int i = 0; i < n; ++i) {
    comp[i] = ~g.neighbors(i);
    comp[i].reset(i);
  }
  auto set = max_clique(comp);
  return {static_cast<int>(set.size()), set};
}

std::vector<int> greedy_coloring(const Graph& g, std::span<const int> order) {
  const int n = g.order();
  std::vector<int> seq(order.begin(), order.end());
  if (seq.empty()) {
    seq.resize(n);
    std::iota(seq.begin(), seq.end(), 0);
  }
  if (static_cast<int>(seq.size()) != n) throw InvalidInput("coloring order must list every vertex");
  std::vector<int> color(n, -1);
  for (int v : seq) {
    if (v < 0 || v >= n || color[v] != -1) throw InvalidInput("coloring order is not a permutation");
    std::vector<bool> taken(n + 1, false);
    const Bitset& nb = g.neighbors(v);
    for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
      if (color[w] >= 0) taken[color[w]] = true;
    }
    int c = 0;
    while (taken[c]) ++c;
    color[v] = c;
  }
  return color;
}

ColoringResult chi(const Graph& g, const SolverCaps& caps) {
  require_cap("chi vertex count", g.order(), caps.chi);
  const int n = g.order();
  if (n == 0) return {0, {}};
  auto greedy = greedy_coloring(g);
  int upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
  int lower = static_cast<int>(max_clique([&] {
                                 std::vector<Bitset> adj;
                                 for (int v = 0; v < n; ++v) adj.push_back(g.neighbors(v));
                                 return adj;
                               }()).size());
  for (int k = lower; k < upper; ++k) {
    Colorer c(g, k);
    if (c.run()) return {k, c.color()};
  }
  return {upper, greedy};
}

MatchingResult im(const Graph& g, const SolverCaps& caps) {
  require_cap("im vertex count", g.order(), caps.im);
  const auto& edges = g.edges();
  auto chosen = max_independent(static_cast<int>(edges.size()),
                                [&](int i, int j) { return edges_joined(g, edges[i], edges[j]); });
  MatchingResult r;
  for (int i : chosen) r.matching.pairs.push_back(edges[i]);
  r.value = static_cast<int>(chosen.size());
  return r;
}

MatchingResult sim_sigma(const Graph& g, const TotalOrder& sigma, const SolverCaps& caps) {
  require_cap("sim_sigma vertex count", g.order(), caps.sim_sigma);
  if (sigma.size() != g.order()) throw InvalidInput("order size does not match the graph");
  std::vector<Edge> oriented;
  for (Edge e : g.edges()) {
    if (sigma.rank(e.v) < sigma.rank(e.u)) std::swap(e.u, e.v);
    oriented.push_back(e);
  }
  std::sort(oriented.begin(), oriented.end(), [&](const Edge& a, const Edge& b) {
    if (a.u != b.u) return sigma.rank(a.u) < sigma.rank(b.u);
    return sigma.rank(a.v) < sigma.rank(b.v);
  });
  // After sorting, i < j means edge i comes no later than edge j.
  auto conflict = [&](int i, int j) {
    const Edge& a = oriented[std::min(i, j)];
    const Edge& b = oriented[std::max(i, j)];
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return true;
    return g.adjacent(a.u, b.u) || g.adjacent(a.u, b.v);
  };
  auto chosen = max_independent(static_cast<int>(oriented.size()), conflict);
  MatchingResult r;
  for (int i : chosen) r.matching.pairs.push_back(oriented[i]);
  r.value = static_cast<int>(chosen.size());
  r.order = sigma;
  return r;
}

TotalOrder order_for_sequence(int n, std::span<const Edge> designated) {
  std::vector<int> seq;
  std::vector<bool> placed(n, false);
  for (const Edge& e : designated) {
    seq.push_back(e.u);
    placed[e.u] = true;
  }
  for (const Edge& e : designated) {
    seq.push_back(e.v);
    placed[e.v] = true;
  }
  for (int v = 0; v < n; ++v) {
    if (!placed[v]) seq.push_back(v);
  }
  return TotalOrder::from_sequence(seq);
}

namespace {

// Longest sequence of disjoint edges (u_i, v_i) where u_i has no neighbour
// among the endpoints of later edges. The sequence is built from its end.
// A state keeps only what the future depends on: F, the vertices that may
// still be a first endpoint, and A, the unused vertices next to F.
class SimSearch {
 public:
  explicit SimSearch(const Graph& g) : n_(g.order()), nb_(g.order(), 0) {
    for (const Edge& e : g.edges()) {
      nb_[e.u] |= bit(e.v);
      nb_[e.v] |= bit(e.u);
    }
  }

  int solve(Mask f, Mask a) {
    normalize(f, a);
    return solve_normal(f, a);
  }

  // Edges listed from last to first.
  void witness(Mask f, Mask a, std::vector<Edge>& out) {
    normalize(f, a);
    if (f == 0) return;
    std::vector<Mask> parts = components(a);
    if (parts.size() > 1) {
      for (Mask c : parts) witness(f & c, a & c, out);
      return;
    }
    const int target = solve_normal(f, a);
    for (Mask fu = f; fu; fu &= fu - 1) {
      const int u = std::countr_zero(fu);
      for (Mask pv = nb_[u] & a; pv; pv &= pv - 1) {
        const int v = std::countr_zero(pv);
        Mask cf = f, ca = a;
        child(u, v, cf, ca);
        if (1 + solve(cf, ca) == target) {
          out.push_back({u, v});
          witness(cf, ca, out);
          return;
        }
      }
    }
    throw std::logic_error("sim witness reconstruction failed");
  }

  Mask all() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }

 private:
  static int bound(Mask f, Mask a) {
    return std::min(std::popcount(f), std::popcount(a) / 2);
  }

  void child(int u, int v, Mask& f, Mask& a) const {
    const Mask used = bit(u) | bit(v);
    f &= ~(used | nb_[u] | nb_[v]);
    a &= ~used;
  }

  // Drops first-endpoint candidates without partners and vertices that can
  // no longer be an endpoint, until nothing changes.
  void normalize(Mask& f, Mask& a) const {
    while (true) {
      Mask reach = f;
      Mask keep_f = 0;
      for (Mask fu = f; fu; fu &= fu - 1) {
        const int u = std::countr_zero(fu);
        if (nb_[u] & a) {
          keep_f |= bit(u);
          reach |= nb_[u];
        }
      }
      const Mask keep_a = a & (keep_f | reach_of(keep_f));
      if (keep_f == f && keep_a == a) return;
      f = keep_f;
      a = keep_a;
    }
  }

  Mask reach_of(Mask f) const {
    Mask r = 0;
    for (; f; f &= f - 1) r |= nb_[std::countr_zero(f)];
    return r;
  }

  std::vector<Mask> components(Mask a) const {
    std::vector<Mask> parts;
    while (a) {
      Mask comp = a & (~a + 1);
      Mask frontier = comp;
      while (frontier) {
        Mask grow = reach_of(frontier) & a & ~comp;
        comp |= grow;
        frontier = grow;
      }
      parts.push_back(comp);
      a &= ~comp;
    }
    return parts;
  }

  int solve_normal(Mask f, Mask a) {
    if (f == 0) return 0;
    const auto key = std::make_pair(f, a);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int best = 0;
    std::vector<Mask> parts = components(a);
    if (parts.size() > 1) {
      for (Mask c : parts) best += solve(f & c, a & c);
    } else {
      const int cap = bound(f, a);
      for (Mask fu = f; fu && best < cap; fu &= fu - 1) {
        const int u = std::countr_zero(fu);
        for (Mask pv = nb_[u] & a; pv && best < cap; pv &= pv - 1) {
          const int v = std::countr_zero(pv);
          Mask cf = f, ca = a;
          child(u, v, cf, ca);
          normalize(cf, ca);
          // Children that cannot beat the best found here are skipped; the
          // memoized values stay exact.
          if (1 + bound(cf, ca) <= best) continue;
          best = std::max(best, 1 + solve_normal(cf, ca));
        }
      }
    }
    memo_.emplace(key, best);
    return best;
  }

  struct PairHash {
    std::size_t operator()(const std::pair<Mask, Mask>& k) const {
      return std::hash<Mask>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
  };

  int n_;
  std::vector<Mask> nb_;
  std::unordered_map<std::pair<Mask, Mask>, int, PairHash> memo_;
};

}  // namespace

MatchingResult sim(const Graph& g, const SolverCaps& caps) {
  require_cap("sim vertex count", g.order(), std::min(caps.sim, 64));
  SimSearch search(g);
  std::vector<Edge> seq;
  search.witness(search.all(), search.all(), seq);
  std::reverse(seq.begin(), seq.end());
  MatchingResult r;
  r.value = static_cast<int>(seq.size());
  r.matching.pairs = seq;
  r.order = order_for_sequence(g.order(), seq);
  return r;
}

namespace {

// Dimension via critical pairs: dim(P) <= d iff the critical pairs split into
// d classes, each of which can be reversed by one linear extension, i.e. P
// plus the reversed pairs of the class stays acyclic.
class DimSearch {
 public:
  explicit DimSearch(const Poset& p) : n_(p.order()), up_(n_, 0) {
    for (const Edge& e : p.edges()) up_[e.u] |= bit(e.v);
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        if (a == b || p.comparable(a, b)) continue;
        Mask down_a = 0, down_b = 0;
        for (int x = 0; x < n_; ++x) {
          if (up_[x] & bit(a)) down_a |= bit(x);
          if (up_[x] & bit(b)) down_b |= bit(x);
        }
        if ((down_a & ~down_b) == 0 && (up_[b] & ~up_[a]) == 0) pairs_.push_back({a, b});
      }
    }
  }

  bool is_chain() const { return pairs_.empty(); }

  int lower_bound() const {
    const int m = static_cast<int>(pairs_.size());
    std::vector<Bitset> adj(m, Bitset(m));
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (conflict(pairs_[i], pairs_[j])) {
          adj[i][j] = true;
          adj[j][i] = true;
        }
      }
    }
    return std::max<int>(2, static_cast<int>(max_clique(adj).size()));
  }

  // On success the reach relation of each class is kept for extraction.
  bool feasible(int d) {
    d_ = d;
    reach_.assign(d, std::vector<Mask>(n_));
    for (auto& r : reach_) {
      for (int x = 0; x < n_; ++x) r[x] = up_[x] | bit(x);
    }
    assigned_.assign(pairs_.size(), -1);
    used_ = 0;
    return step(0);
  }

  std::vector<std::vector<int>> extensions() const {
    std::vector<std::vector<int>> out;
    for (const auto& r : reach_) out.push_back(topological(r));
    return out;
  }

 private:
  // Reversing both pairs in one extension would need a <= b' and a' <= b.
  bool conflict(const Edge& x, const Edge& y) const {
    return leq(x.u, y.v) && leq(y.u, x.v);
  }
  bool leq(int a, int b) const { return a == b || (up_[a] & bit(b)); }

  bool step(int done) {
    if (done == static_cast<int>(pairs_.size())) return true;
    // Most constrained unassigned pair first.
    int pick = -1, pick_options = d_ + 1;
    Mask pick_mask = 0;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (assigned_[i] != -1) continue;
      Mask options = 0;
      int limit = std::min(d_, used_ + 1);
      for (int c = 0; c < limit; ++c) {
        if (!(reach_[c][pairs_[i].u] & bit(pairs_[i].v))) options |= bit(c);
      }
      int count = std::popcount(options);
      if (count < pick_options) {
        pick = static_cast<int>(i);
        pick_options = count;
        pick_mask = options;
        if (count == 0) return false;
      }
    }
    const Edge pr = pairs_[pick];
    while (pick_mask) {
      int c = std::countr_zero(pick_mask);
      pick_mask &= pick_mask - 1;
      std::vector<Mask> saved = reach_[c];
      int saved_used = used_;
      add_reversal(c, pr);
      assigned_[pick] = c;
      used_ = std::max(used_, c + 1);
      if (step(done + 1)) return true;
      reach_[c] = std::move(saved);
      assigned_[pick] = -1;
      used_ = saved_used;
    }
    return false;
  }

  // Adds b below a in class c: everything reaching b now reaches a's up-set.
  void add_reversal(int c, const Edge& pr) {
    auto& r = reach_[c];
    Mask target = r[pr.u];
    for (int x = 0; x < n_; ++x) {
      if (r[x] & bit(pr.v)) r[x] |= target;
    }
  }

  std::vector<int> topological(const std::vector<Mask>& r) const {
    std::vector<int> rank(n_, -1);
    Mask placed = 0;
    for (int pos = 0; pos < n_; ++pos) {
      for (int x = 0; x < n_; ++x) {
        if (placed & bit(x)) continue;
        bool minimal = true;
        for (int y = 0; y < n_ && minimal; ++y) {
          if (y != x && !(placed & bit(y)) && (r[y] & bit(x))) minimal = false;
        }
        if (minimal) {
          rank[x] = pos;
          placed |= bit(x);
          break;
        }
      }
    }
    return rank;
  }

  int n_;
  std::vector<Mask> up_;
  std::vector<Edge> pairs_;  // (a, b) to be reversed: some extension puts b below a
  int d_ = 0;
  int used_ = 0;
  std::vector<std::vector<Mask>> reach_;
  std::vector<int> assigned_;
};

}  // namespace

DimResult dim(const Poset& p, const SolverCaps& caps) {
  const int n = p.order();
  require_cap("dim element count", n, std::min(caps.dim, 64));
  DimResult r;
  r.realizer.d = 1;
  DimSearch search(p);
  if (search.is_chain()) {
    r.value = 1;
    r.realizer.coords.assign(n, Point{});
    std::vector<int> rank(n);
    for (int x = 0; x < n; ++x) rank[x] = static_cast<int>(p.below(x).count());
    for (int x = 0; x < n; ++x) r.realizer.coords[x] = {ExtCoord(rank[x] + 1)};
    return r;
  }
  int d = search.lower_bound();
  while (!search.feasible(d)) ++d;
  auto ext = search.extensions();
  r.value = d;
  r.realizer.d = d;
  r.realizer.coords.assign(n, Point(d));
  for (int j = 0; j < d; ++j) {
    for (int x = 0; x < n; ++x) r.realizer.coords[x][j] = ExtCoord(ext[j][x] + 1);
  }
  if (!verify_realizer(p, r.realizer)) throw std::logic_error("dim certificate failed verification");
  return r;
}

void validate_mes(const MesInstance& inst) {
  if (inst.ground < 0 || inst.ground > 64) throw InvalidInput("ground set must have 0..64 elements");
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    Mask seen = 0;
    for (int e : inst.sets[i]) {
      if (e < 0 || e >= inst.ground) {
        throw InvalidInput("set " + std::to_string(i) + " has element " + std::to_string(e) +
                           " outside the ground set");
      }
      if (seen & bit(e)) {
        throw InvalidInput("set " + std::to_string(i) + " repeats element " + std::to_string(e));
      }
      seen |= bit(e);
    }
  }
}

std::optional<std::string> check_expanding_sequence(const MesInstance& inst,
                                                    std::span<const int> sequence) {
  Mask seen = 0;
  int prev = -1;
  for (int idx : sequence) {
    if (idx <= prev) return "indices must be strictly increasing";
    if (idx >= static_cast<int>(inst.sets.size())) return "index " + std::to_string(idx) + " out of range";
    Mask s = 0;
    for (int e : inst.sets[idx]) s |= bit(e);
    if ((s & ~seen) == 0) return "set " + std::to_string(idx) + " adds no new element";
    seen |= s;
    prev = idx;
  }
  return std::nullopt;
}

SequenceResult mes_solve(const MesInstance& inst, const SolverCaps& caps) {
  validate_mes(inst);
  const int m = static_cast<int>(inst.sets.size());
  require_cap("mes set count", m, caps.mes);
  std::vector<Mask> sets(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int e : inst.sets[i]) sets[i] |= bit(e);
  }
  std::map<std::pair<int, Mask>, int> memo;
  std::function<int(int, Mask)> best = [&](int i, Mask seen) -> int {
    if (i == m) return 0;
    auto key = std::make_pair(i, seen);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int v = best(i + 1, seen);
    if (sets[i] & ~seen) v = std::max(v, 1 + best(i + 1, seen | sets[i]));
    memo.emplace(key, v);
    return v;
  };
  SequenceResult r;
  r.value = best(0, 0);
  Mask seen = 0;
  for (int i = 0; i < m; ++i) {
    int remaining = r.value - static_cast<int>(r.sequence.size());
    if ((sets[i] & ~seen) && 1 + best(i + 1, seen | sets[i]) == remaining) {
      r.sequence.push_back(i);
      seen |= sets[i];
    }
  }
  return r;
}

}  // namespace subadd
