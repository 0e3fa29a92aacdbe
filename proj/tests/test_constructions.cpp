#include <gtest/gtest.h>

#include "oracles.hpp"
#include "subadd/constructions.hpp"
#include "subadd/errors.hpp"
#include "subadd/harness.hpp"
#include "subadd/products.hpp"
#include "subadd/solvers.hpp"

using namespace subadd;
using oracle::make_graph;
using oracle::make_poset;

namespace {

std::vector<Graph> graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    for (const Graph& g : oracle::all_graphs(k)) out.push_back(g);
  }
  return out;
}

Graph host(const Graph& g, const Graph& h, const Graph& j) {
  return product(ProductKind::tensor, product(ProductKind::disjunctive, g, h), j);
}

std::vector<ExtCoord> as_coords(const std::vector<Rational>& v) {
  return std::vector<ExtCoord>(v.begin(), v.end());
}

// d = 2 realizer of the 2x2 complete bipartite order bip_e(K2).
Realizer k22_realizer() { return dim(bip_e(complete(2))).realizer; }

}  // namespace

TEST(DecomposeInduced, EverySingleEdgeOfTheEdgeCubeHost) {
  Graph k2 = complete(2);
  Graph big = host(k2, k2, k2);
  ASSERT_EQ(big.order(), 8);
  for (const Edge& e : big.edges()) {
    Matching m{{e}};
    DecompositionWitness w = decompose_induced_matching(k2, k2, k2, m);
    EXPECT_GE(w.first.matching.size() + w.second.matching.size(), 1u);
    EXPECT_FALSE(check_induced_matching(w.first.host, w.first.matching));
    EXPECT_FALSE(check_induced_matching(w.second.host, w.second.matching));
  }
}

TEST(DecomposeInduced, EmptyMatchingGivesEmptyParts) {
  DecompositionWitness w = decompose_induced_matching(complete(2), path(3), complete(2), Matching{});
  EXPECT_EQ(w.first.matching.size(), 0u);
  EXPECT_EQ(w.second.matching.size(), 0u);
  EXPECT_EQ(w.first.host, product(ProductKind::tensor, complete(2), complete(2)));
  EXPECT_EQ(w.second.host, product(ProductKind::tensor, path(3), complete(2)));
}

TEST(DecomposeInduced, MaximumMatchingsOfThreeVertexFactors) {
  Graph k2 = complete(2);
  auto small = oracle::all_graphs(3);
  for (const Graph& g : small) {
    for (const Graph& h : small) {
      Graph big = host(g, h, k2);
      MatchingResult best = im(big);
      DecompositionWitness w = decompose_induced_matching(g, h, k2, best.matching);
      ASSERT_FALSE(check_induced_matching(w.first.host, w.first.matching));
      ASSERT_FALSE(check_induced_matching(w.second.host, w.second.matching));
      ASSERT_GE(static_cast<int>(w.first.matching.size() + w.second.matching.size()), best.value);
    }
  }
}

TEST(DecomposeInduced, RejectsNonInducedInput) {
  Graph k2 = complete(2);
  Graph big = host(k2, k2, k2);
  // Two edges sharing a vertex.
  Edge first = big.edges()[0];
  Edge second{};
  for (const Edge& e : big.edges()) {
    if (e != first && (e.u == first.u || e.v == first.u)) second = e;
  }
  ASSERT_NE(second, Edge{});
  Matching bad{{first, second}};
  EXPECT_THROW(decompose_induced_matching(k2, k2, k2, bad), InvalidInput);
}

TEST(DecomposeInduced, FaultHookDropsAnEdge) {
  Graph k2 = complete(2);
  Graph big = host(k2, k2, k2);
  MatchingResult best = im(big);
  ASSERT_GE(best.value, 1);
  DecompositionWitness w = decompose_induced_matching(k2, k2, k2, best.matching, DecompositionFault::drop_edge);
  EXPECT_EQ(w.first.matching.size() + w.second.matching.size() + 1, w.original_size);
}

TEST(DecomposeSemi, EmptyMatchingGivesIdentityOrders) {
  Graph g = path(3), h = complete(2), j = complete(2);
  Graph big = host(g, h, j);
  DecompositionWitness w = decompose_semi_induced(g, h, j, Matching{}, TotalOrder::identity(big.order()));
  EXPECT_EQ(w.first.matching.size() + w.second.matching.size(), 0u);
  EXPECT_EQ(*w.first.order, TotalOrder::identity(w.first.host.order()));
  EXPECT_EQ(*w.second.order, TotalOrder::identity(w.second.host.order()));
}

TEST(DecomposeSemi, InducedInputStaysInduced) {
  auto small = oracle::all_graphs(3);
  Graph k2 = complete(2);
  Rng rng(3);
  for (const Graph& g : small) {
    for (const Graph& h : small) {
      Graph big = host(g, h, k2);
      MatchingResult best = im(big);
      TotalOrder sigma = TotalOrder::from_sequence(rng.permutation(big.order()));
      DecompositionWitness w = decompose_semi_induced(g, h, k2, best.matching, sigma);
      ASSERT_FALSE(check_induced_matching(w.first.host, w.first.matching));
      ASSERT_FALSE(check_induced_matching(w.second.host, w.second.matching));
    }
  }
}

TEST(DecomposeSemi, MaximumMatchingsUnderRandomOrders) {
  auto small = oracle::all_graphs(3);
  Graph k2 = complete(2);
  Rng rng(9);
  for (const Graph& g : small) {
    for (const Graph& h : small) {
      Graph big = host(g, h, k2);
      TotalOrder sigma = TotalOrder::from_sequence(rng.permutation(big.order()));
      MatchingResult best = sim_sigma(big, sigma);
      DecompositionWitness w = decompose_semi_induced(g, h, k2, best.matching, sigma);
      ASSERT_TRUE(oracle::is_semi_induced(w.first.host, w.first.matching.pairs, *w.first.order));
      ASSERT_TRUE(oracle::is_semi_induced(w.second.host, w.second.matching.pairs, *w.second.order));
      ASSERT_GE(static_cast<int>(w.first.matching.size() + w.second.matching.size()), best.value);
    }
  }
}

TEST(RealizerLex, TwoEdges) {
  Graph k2 = complete(2);
  LexRealizer r = build_realizer_lex(k2, k2, k22_realizer(), k22_realizer(), chi(k2).color);
  EXPECT_EQ(r.realizer.d, 6);
  EXPECT_EQ(r.layout.total(), 6);
  EXPECT_TRUE(oracle::realizes(bip_e(product(ProductKind::lexicographic, k2, k2)), r.realizer));
}

TEST(RealizerLex, SingleVertexBase) {
  Graph k1 = empty(1), h = path(3);
  Realizer phi_h = dim(bip_e(h)).realizer;
  Realizer phi_g = dim(bip_e(k1)).realizer;
  LexRealizer r = build_realizer_lex(k1, h, phi_g, phi_h, std::vector<int>{0});
  EXPECT_EQ(r.realizer.d, phi_g.d + phi_h.d);
  EXPECT_EQ(bip_e(product(ProductKind::lexicographic, k1, h)), bip_e(h));
  EXPECT_TRUE(oracle::realizes(bip_e(h), r.realizer));
}

TEST(RealizerLex, ExactDimensionNeverExceedsTheConstruction) {
  for (const Graph& g : graphs_up_to(3)) {
    for (const Graph& h : graphs_up_to(3)) {
      ColoringResult c = chi(g);
      LexRealizer r = build_realizer_lex(g, h, dim(bip_e(g)).realizer, dim(bip_e(h)).realizer, c.color);
      Poset target = bip_e(product(ProductKind::lexicographic, g, h));
      ASSERT_TRUE(oracle::realizes(target, r.realizer));
      ASSERT_LE(dim(target).value, r.realizer.d);
    }
  }
}

TEST(RealizerLex, RejectsBadInputs) {
  Graph k2 = complete(2);
  EXPECT_THROW(build_realizer_lex(k2, k2, k22_realizer(), k22_realizer(), std::vector<int>{0, 0}), InvalidInput);
  Realizer wrong = dim(antichain(4)).realizer;
  EXPECT_THROW(build_realizer_lex(k2, k2, wrong, k22_realizer(), std::vector<int>{0, 1}), InvalidInput);
}

TEST(AbsorbComplete, SingleCopyIsIdentity) {
  Realizer phi = k22_realizer();
  CheckedRealizer r = absorb_complete(1, bip_e(complete(2)), phi);
  EXPECT_EQ(r.realizer, phi);
  EXPECT_FALSE(r.relaxed);
}

TEST(AbsorbComplete, ChainCopies) {
  Poset c2 = chain(2);
  CheckedRealizer r = absorb_complete(2, c2, dim(c2).realizer);
  EXPECT_EQ(r.realizer.d, 1);
  EXPECT_TRUE(r.relaxed);
  Poset target = extended_tensor_poset(complete(2), c2);
  EXPECT_TRUE(verify_realizer(target, r.realizer, RealizerCheck::relaxed));
  EXPECT_FALSE(verify_realizer(target, r.realizer, RealizerCheck::strict));
}

TEST(AbsorbComplete, ThreeCopiesOfTheSquare) {
  Poset p = bip_e(complete(2));
  CheckedRealizer r = absorb_complete(3, p, k22_realizer());
  EXPECT_EQ(r.realizer.d, 2);
  EXPECT_TRUE(verify_realizer(extended_tensor_poset(complete(3), p), r.realizer, RealizerCheck::relaxed));
}

TEST(LiftK2, UnitSidesRelabelOnly) {
  Graph a = path(3);
  Realizer phi = dim(bip_e(a)).realizer;
  CheckedRealizer r = lift_K2_to_KUV(a, phi, 1, 1);
  EXPECT_EQ(r.realizer.d, phi.d);
  EXPECT_FALSE(r.relaxed);
  EXPECT_TRUE(verify_realizer(extended_tensor_poset(a, complete_bipartite_poset(1, 1)), r.realizer));
}

TEST(LiftK2, EdgeToTwoByTwo) {
  Graph k2 = complete(2);
  const int d = dim(bip_e(k2)).value;
  CheckedRealizer r = lift_K2_to_KUV(k2, dim(bip_e(k2)).realizer, 2, 2);
  Poset target = extended_tensor_poset(k2, complete_bipartite_poset(2, 2));
  EXPECT_EQ(target.order(), 8);
  EXPECT_EQ(r.realizer.d, d);
  EXPECT_TRUE(verify_realizer(target, r.realizer, RealizerCheck::relaxed));
}

TEST(LiftK2, EmptyBaseReplicatesParallelChains) {
  Graph e2 = empty(2);
  CheckedRealizer r = lift_K2_to_KUV(e2, dim(bip_e(e2)).realizer, 2, 1);
  EXPECT_TRUE(verify_realizer(extended_tensor_poset(e2, complete_bipartite_poset(2, 1)), r.realizer,
                              RealizerCheck::relaxed));
}

TEST(Concat, SamePosetDoublesDimension) {
  Poset p = bip(complete(3));
  Realizer phi = dim(p).realizer;
  ConcatResult r = concat_realizers(p, phi, p, phi);
  EXPECT_EQ(r.intersection, p);
  EXPECT_EQ(r.result.realizer.d, 2 * phi.d);
  EXPECT_TRUE(oracle::realizes(p, r.result.realizer));
}

TEST(Concat, ChainAndReverseGiveAnAntichain) {
  Poset up = chain(3);
  Poset down = make_poset(3, {{2, 1}, {1, 0}});
  ConcatResult r = concat_realizers(up, dim(up).realizer, down, dim(down).realizer);
  EXPECT_EQ(r.intersection, antichain(3));
  EXPECT_TRUE(oracle::realizes(antichain(3), r.result.realizer));
}

TEST(Concat, HalvesOfADecompositionRealizeTheProduct) {
  Graph a = path(3);
  Poset p = make_poset(3, {{0, 1}, {0, 2}});
  PosetDecomposition d = poset_decompose(a, p);
  CheckedRealizer left = lift_K2_to_KUV(a, dim(bip_e(a)).realizer, d.side);
  CheckedRealizer right = absorb_complete(a.order(), p, dim(p).realizer);
  ConcatResult r = concat_realizers(d.kuv_part, left.realizer, d.complete_part, right.realizer);
  EXPECT_EQ(r.intersection, extended_tensor_poset(a, p));
  EXPECT_TRUE(oracle::realizes(extended_tensor_poset(a, p), r.result.realizer));
}

TEST(PosetDecompose, EdgeTimesDirectedEdge) {
  PosetDecomposition d = poset_decompose(complete(2), chain(2));
  std::vector<Edge> both;
  for (const Edge& e : d.kuv_part.edges()) {
    if (d.complete_part.less(e.u, e.v)) both.push_back(e);
  }
  EXPECT_EQ(both, extended_tensor_poset(complete(2), chain(2)).edges());
  // Relabelled bip_e(K2): every bottom below every top.
  EXPECT_EQ(both.size(), 4u);
}

TEST(PosetDecompose, EmptyBaseAndAntichain) {
  Poset p = complete_bipartite_poset(1, 2);
  PosetDecomposition d = poset_decompose(empty(3), p);
  std::vector<Edge> both;
  for (const Edge& e : d.kuv_part.edges()) {
    if (d.complete_part.less(e.u, e.v)) both.push_back(e);
  }
  EXPECT_EQ(both, extended_tensor_poset(empty(3), p).edges());
  PosetDecomposition flat = poset_decompose(complete(2), antichain(3));
  EXPECT_TRUE(flat.kuv_part.edges().empty());
  EXPECT_TRUE(flat.complete_part.edges().empty());
  EXPECT_EQ(flat.side, (std::vector<int>{0, 0, 0}));
  EXPECT_THROW(poset_decompose(complete(2), chain(3)), InvalidInput);
}

TEST(HitMap, EmptySetHitsNothing) {
  Graph k2 = complete(2);
  auto psi = as_coords(hit_map(k2, std::vector<int>{}));
  EXPECT_EQ(psi.size(), 4u);
  for (int u = 0; u < 2; ++u) EXPECT_FALSE(hits(k2, psi, u));
}

TEST(HitMap, SingleVertex) {
  Graph k2 = complete(2);
  auto psi = as_coords(hit_map(k2, std::vector<int>{0}));
  EXPECT_TRUE(hits(k2, psi, 0));
  EXPECT_FALSE(hits(k2, psi, 1));
}

TEST(HitMap, RejectsDependentSets) {
  EXPECT_THROW(hit_map(complete(2), std::vector<int>{0, 1}), InvalidInput);
}

TEST(HitMap, HitsExactlyTheIndependentSetOnSmallGraphs) {
  for (const Graph& g : graphs_up_to(4)) {
    const int n = g.order();
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> x;
      for (int u = 0; u < n; ++u) {
        if (mask >> u & 1) x.push_back(u);
      }
      if (check_independent_set(g, x)) continue;
      auto psi = as_coords(hit_map(g, x));
      for (int u = 0; u < n; ++u) ASSERT_EQ(hits(g, psi, u), static_cast<bool>(mask >> u & 1));
    }
  }
}

TEST(ExtendToB, Triangle) {
  Graph k3 = complete(3);
  Realizer phi_e = dim(bip_e(k3)).realizer;
  ASSERT_EQ(phi_e.d, 2);
  Realizer phi = extend_Be_realizer_to_B(k3, phi_e, chi(k3).color);
  EXPECT_EQ(phi.d, 7);
  EXPECT_TRUE(oracle::realizes(bip(k3), phi));
  EXPECT_LE(dim(bip(k3)).value, phi.d);
}

TEST(ExtendToB, EdgeAndEmptyGraph) {
  Graph k2 = complete(2);
  Realizer phi = extend_Be_realizer_to_B(k2, k22_realizer(), chi(k2).color);
  EXPECT_EQ(phi.d, 6);
  EXPECT_TRUE(oracle::realizes(bip(k2), phi));
  Graph e2 = empty(2);
  Realizer psi = extend_Be_realizer_to_B(e2, dim(bip_e(e2)).realizer, chi(e2).color);
  EXPECT_TRUE(oracle::realizes(bip(e2), psi));
  EXPECT_TRUE(oracle::realizes(antichain(4), psi));
}

TEST(ExtendToB, AllSmallGraphs) {
  for (const Graph& g : graphs_up_to(4)) {
    Realizer phi_e = dim(bip_e(g)).realizer;
    ColoringResult c = chi(g);
    Realizer phi = extend_Be_realizer_to_B(g, phi_e, c.color);
    ASSERT_EQ(phi.d, phi_e.d + c.value + 2);
    ASSERT_TRUE(oracle::realizes(bip(g), phi));
  }
}

TEST(ColoringFromB, TriangleCertificate) {
  Graph k3 = complete(3);
  DimResult r = dim(bip(k3));
  std::vector<int> c = coloring_from_B_realizer(k3, r.realizer);
  EXPECT_FALSE(check_proper_coloring(k3, c));
  for (int x : c) EXPECT_LT(x, r.value);
}

TEST(ColoringFromB, FewColorsOnEmptyAndEdge) {
  Graph e3 = empty(3);
  DimResult r = dim(bip(e3));
  ASSERT_EQ(r.value, 2);
  std::vector<int> c = coloring_from_B_realizer(e3, r.realizer);
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  EXPECT_LE(c.size(), 2u);
  Graph k2 = complete(2);
  std::vector<int> c2 = coloring_from_B_realizer(k2, dim(bip(k2)).realizer);
  EXPECT_NE(c2[0], c2[1]);
}

TEST(ColoringFromB, ProperOnAllSmallGraphs) {
  for (const Graph& g : graphs_up_to(4)) {
    DimResult r = dim(bip(g));
    std::vector<int> c = coloring_from_B_realizer(g, r.realizer);
    ASSERT_FALSE(check_proper_coloring(g, c));
    for (int x : c) ASSERT_LT(x, r.value);
  }
}

TEST(Perturb, MakesRelaxedRealizersInjective) {
  Poset c2 = chain(2);
  CheckedRealizer r = absorb_complete(2, c2, dim(c2).realizer);
  Poset target = extended_tensor_poset(complete(2), c2);
  Realizer fixed = perturb(target, r.realizer);
  EXPECT_EQ(fixed.d, r.realizer.d + 2);
  EXPECT_TRUE(verify_realizer(target, fixed));
  EXPECT_THROW(perturb(chain(3), dim(chain(3)).realizer), InvalidInput);
}

TEST(ProductPoset, SmallCases) {
  for (const Graph& g : graphs_up_to(2)) {
    for (const Graph& h : graphs_up_to(2)) {
      for (const Poset& p : {chain(2), antichain(2), complete_bipartite_poset(1, 2)}) {
        ColoringResult c = chi(g);
        DimResult dg = dim(bip_e(g)), dh = dim(bip_e(h)), dp = dim(p);
        Eq3Result r = product_poset_realizer(g, h, p, dg.realizer, dh.realizer, c.color, dp.realizer);
        Poset target = extended_tensor_poset(product(ProductKind::lexicographic, g, h), p);
        ASSERT_TRUE(oracle::realizes(target, r.realizer));
        ASSERT_LE(r.realizer.d, dg.value + c.value * dh.value + dp.value);
      }
    }
  }
}
