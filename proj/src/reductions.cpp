#include "subadd/reductions.hpp"

#include <algorithm>
#include <functional>

#include "subadd/errors.hpp"
#include "subadd/products.hpp"

namespace subadd {

using namespace json_detail;

Bipartite make_bipartite(int left, int right, std::span<const Edge> edges) {
  if (left < 0 || right < 0) throw InvalidInput("negative layer size");
  std::vector<Edge> flat;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= left || e.v < 0 || e.v >= right) {
      throw InvalidInput("bipartite edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") out of range");
    }
    flat.push_back({e.u, left + e.v});
  }
  return {left, right, Graph::from_edges(left + right, flat)};
}

Bipartite split_bipartite(const Graph& g, int left) {
  if (left < 0 || left > g.order()) throw InvalidInput("layer split out of range");
  for (const Edge& e : g.edges()) {
    if ((e.u < left) == (e.v < left)) {
      throw InvalidInput("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") lies inside a layer");
    }
  }
  return {left, g.order() - left, g};
}

namespace {

void require_induced(const Graph& g, const Matching& m) {
  if (auto err = check_induced_matching(g, m)) throw InvalidInput("not an induced matching: " + *err);
}

// Orients a matching edge as (layer-1 vertex, layer-2 vertex).
Edge layered(const Edge& e, int left) { return e.u < left ? e : Edge{e.v, e.u}; }

void require_nonnegative(std::span<const Rational> x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0) throw InvalidInput("component " + std::to_string(i) + " is negative");
  }
}

}  // namespace

// ---- maximum feasible subsystem ----

MrfsInstance mrfs_build(const Bipartite& g, const Rational& beta) {
  if (g.left < 1 || g.right < 1) throw InvalidInput("both layers must be non-empty");
  if (beta < 1) throw InvalidInput("beta must be at least 1");
  const Rational base = beta * g.right;
  if (base < 2) throw InvalidInput("beta * n must be at least 2 for non-degenerate windows");
  MrfsInstance inst;
  inst.source = g;
  inst.beta = beta;
  for (int u = 0; u < g.left; ++u) {
    std::vector<int> row;
    const Bitset& nb = g.graph.neighbors(u);
    for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
      row.push_back(static_cast<int>(w) - g.left);
    }
    inst.rows.push_back(std::move(row));
    const unsigned label = static_cast<unsigned>(u + 1);
    inst.ell.push_back(pow(base, 3 * label - 1));
    inst.mu.push_back(pow(base, 3 * label));
  }
  return inst;
}

int mrfs_eval(const MrfsInstance& inst, std::span<const Rational> x, const Rational& beta) {
  if (static_cast<int>(x.size()) != inst.n()) throw InvalidInput("x has the wrong length");
  require_nonnegative(x);
  int count = 0;
  for (int u = 0; u < inst.m(); ++u) {
    Rational sum = 0;
    for (int w : inst.rows[u]) sum += x[w];
    if (inst.ell[u] <= sum && sum <= beta * inst.mu[u]) ++count;
  }
  return count;
}

std::vector<Rational> mrfs_from_matching(const MrfsInstance& inst, const Matching& m) {
  require_induced(inst.source.graph, m);
  std::vector<Rational> x(inst.n(), Rational(0));
  for (const Edge& e : m.pairs) {
    Edge l = layered(e, inst.source.left);
    x[l.v - inst.source.left] = inst.ell[l.u];
  }
  return x;
}

SemiInducedCertificate mrfs_recover(const MrfsInstance& inst, std::span<const Rational> x,
                                    const Rational& beta) {
  if (static_cast<int>(x.size()) != inst.n()) throw InvalidInput("x has the wrong length");
  require_nonnegative(x);
  SemiInducedCertificate cert;
  cert.sigma = TotalOrder::identity(inst.m() + inst.n());
  for (int u = 0; u < inst.m(); ++u) {
    Rational sum = 0;
    for (int w : inst.rows[u]) sum += x[w];
    if (!(inst.ell[u] <= sum && sum <= beta * inst.mu[u])) continue;
    int best = inst.rows[u].front();
    for (int w : inst.rows[u]) {
      if (x[w] > x[best]) best = w;
    }
    cert.matching.pairs.push_back({u, inst.m() + best});
  }
  return cert;
}

std::vector<Rational> mrfs_grid(const MrfsInstance& inst) {
  std::vector<Rational> grid{Rational(0)};
  for (int u = 0; u < inst.m(); ++u) {
    grid.push_back(inst.ell[u] / inst.n());
    grid.push_back(inst.ell[u]);
    grid.push_back(inst.mu[u]);
    grid.push_back(inst.beta * inst.mu[u]);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

// ---- pricing ----

std::string_view to_string(PricingModel model) {
  return model == PricingModel::udp_min ? "udpmin" : "smp";
}

PricingModel parse_pricing_model(std::string_view name) {
  if (name == "udpmin" || name == "udp-min" || name == "udp_min") return PricingModel::udp_min;
  if (name == "smp") return PricingModel::smp;
  throw InvalidInput("unknown pricing model '" + std::string(name) + "'");
}

PricingInstance pricing_build(const Graph& g, const Graph& h) {
  if (g.order() < 1 || h.order() < 1) throw InvalidInput("G and H must be non-empty");
  PricingInstance inst;
  inst.g = g;
  inst.h = h;
  inst.host = undirected_view(bip_e(product(ProductKind::disjunctive, g, h)));
  const int n = inst.items();
  inst.base = n;
  for (int w = 0; w < n; ++w) {
    PricingGroup grp;
    grp.vertex = w;
    const Bitset& nb = inst.host.neighbors(w);
    for (auto y = nb.find_first(); y != Bitset::npos; y = nb.find_next(y)) {
      grp.items.push_back(static_cast<int>(y) - n);
    }
    const unsigned e = 3 * static_cast<unsigned>(inst.label(w));
    grp.multiplicity = boost::multiprecision::pow(inst.base, e);
    grp.budget = Rational(BigInt(1), grp.multiplicity);
    inst.groups.push_back(std::move(grp));
  }
  return inst;
}

Rational pricing_payment(const PricingInstance& inst, const PriceVector& p, PricingModel model,
                         int group) {
  const PricingGroup& grp = inst.groups[group];
  if (grp.items.empty()) return 0;
  ExtCoord pay;
  if (model == PricingModel::udp_min) {
    pay = ExtCoord::infinity();
    for (int i : grp.items) pay = std::min(pay, p[i]);
  } else {
    Rational sum = 0;
    for (int i : grp.items) {
      if (p[i].is_infinite()) return 0;
      sum += p[i].value();
    }
    pay = sum;
  }
  if (pay.is_infinite() || pay.value() > grp.budget) return 0;
  return pay.value();
}

Rational pricing_revenue(const PricingInstance& inst, const PriceVector& p, PricingModel model) {
  if (static_cast<int>(p.size()) != inst.items()) throw InvalidInput("price vector has the wrong length");
  for (const ExtCoord& c : p) {
    if (!c.is_infinite() && c.value() < 0) throw InvalidInput("negative price");
  }
  Rational total = 0;
  for (std::size_t c = 0; c < inst.groups.size(); ++c) {
    total += pricing_payment(inst, p, model, static_cast<int>(c)) *
             Rational(inst.groups[c].multiplicity);
  }
  return total;
}

PricePair pricing_from_matching(const PricingInstance& inst, const Matching& m) {
  require_induced(inst.host, m);
  const int n = inst.items();
  PricePair out{PriceVector(n, ExtCoord::infinity()), PriceVector(n, ExtCoord(0))};
  for (const Edge& e : m.pairs) {
    Edge l = layered(e, n);
    ExtCoord price(inst.groups[l.u].budget);
    out.udp_min[l.v - n] = price;
    out.smp[l.v - n] = price;
  }
  return out;
}

PricingRecovery pricing_recover(const PricingInstance& inst, const PriceVector& p,
                                PricingModel model) {
  const int n = inst.items();
  PricingRecovery rec;
  std::vector<int> canonical;
  for (int c = 0; c < n; ++c) {
    const Rational& budget = inst.groups[c].budget;
    const Rational pay = pricing_payment(inst, p, model, c);
    if (!(budget / inst.base <= pay && pay <= budget)) continue;
    ++rec.tight;
    const Rational low = budget / (inst.base * inst.base);
    bool only_own = true;
    bool own = false;
    for (int i : inst.groups[c].items) {
      bool expensive = !p[i].is_infinite() && low <= p[i].value() && p[i].value() <= budget;
      if (expensive && i == c) own = true;
      if (expensive && i != c) only_own = false;
    }
    if (own && only_own) canonical.push_back(c);
  }
  rec.canonical_tight = static_cast<int>(canonical.size());
  std::stable_sort(canonical.begin(), canonical.end(), [&](int x, int y) {
    return model == PricingModel::udp_min ? inst.label(x) < inst.label(y)
                                          : inst.label(x) > inst.label(y);
  });
  std::vector<int> seq(canonical.begin(), canonical.end());
  std::vector<bool> placed(2 * n, false);
  for (int c : canonical) {
    placed[c] = true;
    rec.certificate.matching.pairs.push_back({c, n + c});
  }
  for (int v = 0; v < 2 * n; ++v) {
    if (!placed[v]) seq.push_back(v);
  }
  rec.certificate.sigma = TotalOrder::from_sequence(seq);
  return rec;
}

std::vector<ExtCoord> pricing_grid(const PricingInstance& inst) {
  std::vector<ExtCoord> grid{ExtCoord(0)};
  for (int a = 1; a <= inst.h.order(); ++a) {
    grid.push_back(ExtCoord(Rational(BigInt(1), boost::multiprecision::pow(inst.base, 3 * a))));
  }
  grid.push_back(ExtCoord::infinity());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

GridOptimum pricing_grid_optimum(const PricingInstance& inst, PricingModel model) {
  const auto grid = pricing_grid(inst);
  const int n = inst.items();
  std::vector<int> digit(n, 0);
  PriceVector p(n, grid[0]);
  GridOptimum best{pricing_revenue(inst, p, model), p};
  while (true) {
    int i = 0;
    while (i < n && digit[i] + 1 == static_cast<int>(grid.size())) {
      digit[i] = 0;
      p[i] = grid[0];
      ++i;
    }
    if (i == n) break;
    p[i] = grid[++digit[i]];
    Rational r = pricing_revenue(inst, p, model);
    if (r > best.revenue) best = {r, p};
  }
  return best;
}

// ---- donation center location ----

int DclSolution::satisfied() const {
  return static_cast<int>(std::count_if(assignment.begin(), assignment.end(), [](int c) { return c >= 0; }));
}

DclInstance dcl_build(const Bipartite& g) {
  DclInstance inst;
  inst.source = g;
  for (int a = 0; a < g.right; ++a) {
    std::vector<int> centers;
    const Bitset& nb = g.graph.neighbors(g.left + a);
    for (auto c = nb.find_first(); c != Bitset::npos; c = nb.find_next(c)) {
      centers.push_back(static_cast<int>(c));
    }
    inst.acceptable.push_back(std::move(centers));
  }
  return inst;
}

namespace {

int top_open(const DclInstance& inst, const std::vector<bool>& open, int agent) {
  for (int c : inst.acceptable[agent]) {
    if (open[c]) return c;
  }
  return -1;
}

}  // namespace

DclSolution dcl_assign(const DclInstance& inst, const std::vector<bool>& open) {
  DclSolution sol{open, std::vector<int>(inst.agents(), -1)};
  std::vector<bool> full(inst.centers(), false);
  for (int a = 0; a < inst.agents(); ++a) {
    int c = top_open(inst, open, a);
    if (c >= 0 && !full[c]) {
      sol.assignment[a] = c;
      full[c] = true;
    }
  }
  return sol;
}

std::optional<std::string> dcl_check(const DclInstance& inst, const DclSolution& sol) {
  if (static_cast<int>(sol.open.size()) != inst.centers()) return "open set has the wrong length";
  if (static_cast<int>(sol.assignment.size()) != inst.agents()) return "assignment has the wrong length";
  std::vector<int> load(inst.centers(), 0);
  for (int a = 0; a < inst.agents(); ++a) {
    int c = sol.assignment[a];
    if (c < 0) continue;
    const std::string who = "agent " + std::to_string(a);
    if (c >= inst.centers()) return who + " assigned to a non-existent center";
    if (!sol.open[c]) return who + " assigned to closed center " + std::to_string(c);
    if (top_open(inst, sol.open, a) != c) {
      return who + " is not at its most preferred open center";
    }
    if (++load[c] > 1) return "center " + std::to_string(c) + " exceeds capacity 1";
  }
  return std::nullopt;
}

DclSolution dcl_forward(const DclInstance& inst, const Matching& m) {
  require_induced(inst.source.graph, m);
  DclSolution sol{std::vector<bool>(inst.centers(), false), std::vector<int>(inst.agents(), -1)};
  for (const Edge& e : m.pairs) {
    Edge l = layered(e, inst.source.left);
    sol.open[l.u] = true;
    sol.assignment[l.v - inst.source.left] = l.u;
  }
  if (auto err = dcl_check(inst, sol)) throw std::logic_error("forward solution infeasible: " + *err);
  return sol;
}

SemiInducedCertificate dcl_backward(const DclInstance& inst, const DclSolution& sol) {
  if (auto err = dcl_check(inst, sol)) throw InvalidInput("infeasible solution: " + *err);
  SemiInducedCertificate cert;
  cert.sigma = TotalOrder::identity(inst.centers() + inst.agents());
  for (int a = 0; a < inst.agents(); ++a) {
    if (sol.assignment[a] >= 0) cert.matching.pairs.push_back({sol.assignment[a], inst.centers() + a});
  }
  std::sort(cert.matching.pairs.begin(), cert.matching.pairs.end());
  return cert;
}

DclOptimum dcl_opt(const DclInstance& inst) {
  const int m = inst.centers();
  if (m > 20) throw CapExceeded("dcl_opt center count", m, 20);
  DclOptimum best{-1, {}};
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<bool> open(m);
    for (int c = 0; c < m; ++c) open[c] = (mask >> c) & 1u;
    DclSolution sol = dcl_assign(inst, open);
    if (sol.satisfied() > best.value) best = {sol.satisfied(), sol};
  }
  return best;
}

// ---- expanding sequences ----

MesGraph mes_to_sim(const MesInstance& inst) {
  validate_mes(inst);
  const int m = static_cast<int>(inst.sets.size());
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int e : inst.sets[i]) edges.push_back({i, e});
  }
  Bipartite g = make_bipartite(m, inst.ground, edges);
  return {g, TotalOrder::identity(m + inst.ground)};
}

MesInstance sim_to_mes(const Bipartite& g, const TotalOrder& sigma) {
  if (sigma.size() != g.graph.order()) throw InvalidInput("order size does not match the graph");
  for (int v = 0; v < g.left; ++v) {
    if (sigma.rank(v) >= g.left) {
      throw InvalidInput("order is not layered: layer-1 vertex " + std::to_string(v) +
                         " follows a layer-2 vertex");
    }
  }
  MesInstance inst;
  inst.ground = g.right;
  for (int r = 0; r < g.left; ++r) {
    int v = sigma.at(r);
    std::vector<int> set;
    const Bitset& nb = g.graph.neighbors(v);
    for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
      set.push_back(static_cast<int>(w) - g.left);
    }
    inst.sets.push_back(std::move(set));
  }
  return inst;
}

// ---- documents ----

namespace {

Json rational_array(std::span<const Rational> xs) {
  Json arr = Json::array();
  for (const Rational& x : xs) arr.push_back(format_rational(x));
  return arr;
}

std::vector<Rational> read_rational_array(const Json& arr, const std::string& path) {
  if (!arr.is_array()) throw ParseError(path, "expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(as_rational(arr[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

int read_nonneg(const Json& doc, const std::string& key) {
  long long v = as_integer(field(doc, key, "$"), "$." + key);
  if (v < 0) throw ParseError("$." + key, "must be non-negative");
  return static_cast<int>(v);
}

Json bipartite_edges(const Bipartite& g) {
  Json arr = Json::array();
  for (const Edge& e : g.graph.edges()) arr.push_back({e.u, e.v - g.left});
  return arr;
}

Bipartite read_bipartite_fields(const Json& doc, const std::string& prefix) {
  const Json& src = prefix.empty() ? doc : field(doc, prefix, "$");
  const std::string path = prefix.empty() ? "$" : "$." + prefix;
  int left = static_cast<int>(as_integer(field(src, "left", path), path + ".left"));
  int right = static_cast<int>(as_integer(field(src, "right", path), path + ".right"));
  if (left < 0 || right < 0) throw ParseError(path, "negative layer size");
  const Json& arr = field(src, "edges", path);
  if (!arr.is_array()) throw ParseError(path + ".edges", "expected an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string p = path + ".edges[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) throw ParseError(p, "expected a pair");
    edges.push_back({as_index(arr[i][0], left, p + "[0]"), as_index(arr[i][1], right, p + "[1]")});
  }
  try {
    return make_bipartite(left, right, edges);
  } catch (const InvalidInput& e) {
    throw ParseError(path + ".edges", e.what());
  }
}

}  // namespace

Json write_bipartite(const Bipartite& g) {
  return {{"type", "bipartite"}, {"left", g.left}, {"right", g.right}, {"edges", bipartite_edges(g)}};
}

Bipartite read_bipartite(const Json& doc) {
  expect_type(doc, "bipartite", "$");
  return read_bipartite_fields(doc, "");
}

Json write_mrfs(const MrfsInstance& inst) {
  Json rows = Json::array();
  for (const auto& r : inst.rows) rows.push_back(r);
  return {{"type", "mrfs"},
          {"m", inst.m()},
          {"n", inst.n()},
          {"beta", format_rational(inst.beta)},
          {"rows", rows},
          {"ell", rational_array(inst.ell)},
          {"mu", rational_array(inst.mu)},
          {"source", write_bipartite(inst.source)}};
}

MrfsInstance read_mrfs(const Json& doc) {
  expect_type(doc, "mrfs", "$");
  Bipartite g = read_bipartite_fields(doc, "source");
  Rational beta = as_rational(field(doc, "beta", "$"), "$.beta");
  MrfsInstance inst = mrfs_build(g, beta);
  if (read_rational_array(field(doc, "ell", "$"), "$.ell") != inst.ell ||
      read_rational_array(field(doc, "mu", "$"), "$.mu") != inst.mu) {
    throw ParseError("$", "ell/mu do not match the source graph and beta");
  }
  return inst;
}

Json write_pricing(const PricingInstance& inst, PricingModel model) {
  Json groups = Json::array();
  for (const PricingGroup& grp : inst.groups) {
    groups.push_back({{"vertex", grp.vertex},
                      {"items", grp.items},
                      {"budget", format_rational(grp.budget)},
                      {"multiplicity", grp.multiplicity.str()}});
  }
  return {{"type", std::string(to_string(model))},
          {"items", inst.items()},
          {"base", inst.base.str()},
          {"groups", groups},
          {"g", write_graph(inst.g)},
          {"h", write_graph(inst.h)}};
}

PricingInstance read_pricing(const Json& doc) {
  const Json& t = field(doc, "type", "$");
  if (!t.is_string() || (t != "udpmin" && t != "smp")) {
    throw ParseError("$.type", "expected \"udpmin\" or \"smp\"");
  }
  Graph g = read_graph(field(doc, "g", "$"));
  Graph h = read_graph(field(doc, "h", "$"));
  PricingInstance inst = pricing_build(g, h);
  // The stored groups are derived data; they must agree with the rebuild.
  Json expect = write_pricing(inst, parse_pricing_model(t.get<std::string>()));
  for (const char* key : {"items", "base", "groups"}) {
    if (field(doc, key, "$") != expect[key]) {
      throw ParseError(std::string("$.") + key, "does not match the instance built from g and h");
    }
  }
  return inst;
}

Json write_dcl(const DclInstance& inst) {
  Json agents = Json::array();
  for (const auto& a : inst.acceptable) agents.push_back(a);
  return {{"type", "dcl"},
          {"centers", inst.centers()},
          {"agents", inst.agents()},
          {"capacity", 1},
          {"preference", "lower center index first"},
          {"acceptable", agents},
          {"source", write_bipartite(inst.source)}};
}

DclInstance read_dcl(const Json& doc) {
  expect_type(doc, "dcl", "$");
  DclInstance inst = dcl_build(read_bipartite_fields(doc, "source"));
  Json expect = write_dcl(inst);
  for (const char* key : {"centers", "agents", "acceptable"}) {
    if (doc.contains(key) && doc[key] != expect[key]) {
      throw ParseError(std::string("$.") + key, "does not match the source graph");
    }
  }
  return inst;
}

Json write_mes(const MesInstance& inst) {
  Json sets = Json::array();
  for (const auto& s : inst.sets) sets.push_back(s);
  return {{"type", "mes"}, {"ground", inst.ground}, {"sets", sets}};
}

MesInstance read_mes(const Json& doc) {
  expect_type(doc, "mes", "$");
  MesInstance inst;
  inst.ground = read_nonneg(doc, "ground");
  const Json& sets = field(doc, "sets", "$");
  if (!sets.is_array()) throw ParseError("$.sets", "expected an array");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::string p = "$.sets[" + std::to_string(i) + "]";
    if (!sets[i].is_array()) throw ParseError(p, "expected an array");
    std::vector<int> s;
    for (std::size_t j = 0; j < sets[i].size(); ++j) {
      s.push_back(as_index(sets[i][j], inst.ground, p + "[" + std::to_string(j) + "]"));
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ParseError(p, "repeated element");
    inst.sets.push_back(std::move(s));
  }
  return inst;
}

Json write_vector(std::span<const Rational> x) { return {{"type", "vector"}, {"x", rational_array(x)}}; }

std::vector<Rational> read_vector(const Json& doc) {
  expect_type(doc, "vector", "$");
  return read_rational_array(field(doc, "x", "$"), "$.x");
}

Json write_prices(const PriceVector& p) {
  Json arr = Json::array();
  for (const ExtCoord& c : p) arr.push_back(format_coord(c));
  return {{"type", "prices"}, {"prices", arr}};
}

PriceVector read_prices(const Json& doc) {
  expect_type(doc, "prices", "$");
  const Json& arr = field(doc, "prices", "$");
  if (!arr.is_array()) throw ParseError("$.prices", "expected an array");
  PriceVector p;
  for (std::size_t i = 0; i < arr.size(); ++i) p.push_back(as_coord(arr[i], "$.prices[" + std::to_string(i) + "]"));
  return p;
}

Json write_dcl_solution(const DclSolution& sol) {
  Json open = Json::array();
  for (std::size_t c = 0; c < sol.open.size(); ++c) {
    if (sol.open[c]) open.push_back(c);
  }
  Json assign = Json::array();
  for (std::size_t a = 0; a < sol.assignment.size(); ++a) {
    if (sol.assignment[a] >= 0) assign.push_back({a, sol.assignment[a]});
  }
  return {{"type", "dcl-solution"}, {"open", open}, {"assignment", assign}};
}

DclSolution read_dcl_solution(const Json& doc, const DclInstance& inst) {
  expect_type(doc, "dcl-solution", "$");
  DclSolution sol{std::vector<bool>(inst.centers(), false), std::vector<int>(inst.agents(), -1)};
  const Json& open = field(doc, "open", "$");
  if (!open.is_array()) throw ParseError("$.open", "expected an array");
  for (std::size_t i = 0; i < open.size(); ++i) {
    sol.open[as_index(open[i], inst.centers(), "$.open[" + std::to_string(i) + "]")] = true;
  }
  const Json& assign = field(doc, "assignment", "$");
  if (!assign.is_array()) throw ParseError("$.assignment", "expected an array");
  for (std::size_t i = 0; i < assign.size(); ++i) {
    std::string p = "$.assignment[" + std::to_string(i) + "]";
    if (!assign[i].is_array() || assign[i].size() != 2) throw ParseError(p, "expected [agent, center]");
    int a = as_index(assign[i][0], inst.agents(), p + "[0]");
    if (sol.assignment[a] != -1) throw ParseError(p, "agent assigned twice");
    sol.assignment[a] = as_index(assign[i][1], inst.centers(), p + "[1]");
  }
  return sol;
}

Json write_sequence(std::span<const int> seq) {
  return {{"type", "sequence"}, {"indices", std::vector<int>(seq.begin(), seq.end())}};
}

std::vector<int> read_sequence(const Json& doc) {
  expect_type(doc, "sequence", "$");
  const Json& arr = field(doc, "indices", "$");
  if (!arr.is_array()) throw ParseError("$.indices", "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    long long v = as_integer(arr[i], "$.indices[" + std::to_string(i) + "]");
    if (v < 0) throw ParseError("$.indices[" + std::to_string(i) + "]", "negative index");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace subadd
