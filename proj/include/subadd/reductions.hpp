#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subadd/graph.hpp"
#include "subadd/io.hpp"
#include "subadd/solvers.hpp"

namespace subadd {

// Two-layer graph: vertices 0..left-1 form layer 1, left..left+right-1 layer 2.
struct Bipartite {
  int left = 0;
  int right = 0;
  Graph graph;
  friend bool operator==(const Bipartite&, const Bipartite&) = default;
};

// Edge (i, j) joins layer-1 vertex i to layer-2 vertex j (both 0-based within
// their layer).
Bipartite make_bipartite(int left, int right, std::span<const Edge> edges);
// Throws InvalidInput if g has an edge inside a layer.
Bipartite split_bipartite(const Graph& g, int left);

// A matching together with an order under which it is semi-induced.
struct SemiInducedCertificate {
  TotalOrder sigma;
  Matching matching;
};

// ---- maximum feasible subsystem ----

struct MrfsInstance {
  Bipartite source;
  Rational beta;
  std::vector<std::vector<int>> rows;  // variables (layer-2 positions) per constraint
  std::vector<Rational> ell;
  std::vector<Rational> mu;
  int m() const { return source.left; }
  int n() const { return source.right; }
};

// ell_u = (beta n)^(3u-1), mu_u = (beta n)^(3u) for labels u = 1..m.
// Requires beta >= 1, both layers non-empty and beta * n >= 2.
MrfsInstance mrfs_build(const Bipartite& g, const Rational& beta);
// Constraints with ell_u <= a_u . x <= beta * mu_u.
int mrfs_eval(const MrfsInstance& inst, std::span<const Rational> x, const Rational& beta);
// x_{w} = ell_u for every matched pair (u, w). M must be induced in the source.
std::vector<Rational> mrfs_from_matching(const MrfsInstance& inst, const Matching& m);
SemiInducedCertificate mrfs_recover(const MrfsInstance& inst, std::span<const Rational> x,
                                    const Rational& beta);
// Candidate values per variable: 0 and every ell_u, mu_u, beta * mu_u.
std::vector<Rational> mrfs_grid(const MrfsInstance& inst);

// ---- pricing ----

enum class PricingModel { udp_min, smp };
std::string_view to_string(PricingModel model);
PricingModel parse_pricing_model(std::string_view name);

struct PricingGroup {
  int vertex = 0;  // index u * |H| + a in G v H
  std::vector<int> items;
  Rational budget;
  BigInt multiplicity;
};

// Items and groups are indexed by vertices of G v H; H labels are a + 1.
struct PricingInstance {
  Graph g;
  Graph h;
  Graph host;  // undirected view of bip_e(G v H)
  BigInt base;
  std::vector<PricingGroup> groups;
  int items() const { return g.order() * h.order(); }
  int label(int vertex) const { return vertex % h.order() + 1; }
};

using PriceVector = std::vector<ExtCoord>;

struct PricePair {
  PriceVector udp_min;
  PriceVector smp;
  const PriceVector& for_model(PricingModel model) const {
    return model == PricingModel::udp_min ? udp_min : smp;
  }
};

struct PricingRecovery {
  int tight = 0;
  int canonical_tight = 0;
  SemiInducedCertificate certificate;
};

PricingInstance pricing_build(const Graph& g, const Graph& h);
Rational pricing_revenue(const PricingInstance& inst, const PriceVector& p, PricingModel model);
// What group c pays (0 if it does not buy).
Rational pricing_payment(const PricingInstance& inst, const PriceVector& p, PricingModel model,
                         int group);
// M must be an induced matching of inst.host.
PricePair pricing_from_matching(const PricingInstance& inst, const Matching& m);
PricingRecovery pricing_recover(const PricingInstance& inst, const PriceVector& p,
                                PricingModel model);
// {0} u {1/base^(3a)} u {+inf}.
std::vector<ExtCoord> pricing_grid(const PricingInstance& inst);

struct GridOptimum {
  Rational revenue;
  PriceVector prices;
};
// Exhaustive over the grid; the first optimum in lexicographic grid order.
GridOptimum pricing_grid_optimum(const PricingInstance& inst, PricingModel model);

// ---- donation center location ----

// Centers are layer 1 (capacity 1), agents layer 2. Every agent prefers the
// lowest-indexed open center among its neighbours.
struct DclInstance {
  Bipartite source;
  std::vector<std::vector<int>> acceptable;  // per agent, centers ascending
  int centers() const { return source.left; }
  int agents() const { return source.right; }
};

struct DclSolution {
  std::vector<bool> open;       // per center
  std::vector<int> assignment;  // per agent: center or -1
  int satisfied() const;
};

DclInstance dcl_build(const Bipartite& g);
// Assignment induced by an open set: each open center takes the lowest-indexed
// agent that ranks it first among open centers.
DclSolution dcl_assign(const DclInstance& inst, const std::vector<bool>& open);
std::optional<std::string> dcl_check(const DclInstance& inst, const DclSolution& sol);
// M must be induced in the source.
DclSolution dcl_forward(const DclInstance& inst, const Matching& m);
// Throws InvalidInput for an infeasible solution.
SemiInducedCertificate dcl_backward(const DclInstance& inst, const DclSolution& sol);

struct DclOptimum {
  int value = 0;
  DclSolution solution;
};
DclOptimum dcl_opt(const DclInstance& inst);

// ---- expanding sequences ----

struct MesGraph {
  Bipartite graph;  // layer 1 = sets, layer 2 = elements
  TotalOrder sigma;
};

MesGraph mes_to_sim(const MesInstance& inst);
// sigma must rank every layer-1 vertex before every layer-2 vertex.
MesInstance sim_to_mes(const Bipartite& g, const TotalOrder& sigma);

// ---- documents ----

Json write_bipartite(const Bipartite& g);
Bipartite read_bipartite(const Json& doc);
Json write_mrfs(const MrfsInstance& inst);
MrfsInstance read_mrfs(const Json& doc);
Json write_pricing(const PricingInstance& inst, PricingModel model);
PricingInstance read_pricing(const Json& doc);
Json write_dcl(const DclInstance& inst);
DclInstance read_dcl(const Json& doc);
Json write_mes(const MesInstance& inst);
MesInstance read_mes(const Json& doc);

Json write_vector(std::span<const Rational> x);
std::vector<Rational> read_vector(const Json& doc);
Json write_prices(const PriceVector& p);
PriceVector read_prices(const Json& doc);
Json write_dcl_solution(const DclSolution& sol);
DclSolution read_dcl_solution(const Json& doc, const DclInstance& inst);
Json write_sequence(std::span<const int> seq);
std::vector<int> read_sequence(const Json& doc);

}  // namespace subadd
