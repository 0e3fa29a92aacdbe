#include <gtest/gtest.h>

#include "oracles.hpp"
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

}  // namespace

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha(empty(5)).value, 5);
  EXPECT_EQ(alpha(cycle(5)).value, 2);
  VertexSetResult sq = alpha(product(ProductKind::disjunctive, cycle(5), cycle(5)));
  EXPECT_EQ(sq.value, 4);
  EXPECT_FALSE(check_independent_set(product(ProductKind::disjunctive, cycle(5), cycle(5)), sq.vertices));
  EXPECT_EQ(alpha(empty(0)).value, 0);
}

TEST(Alpha, AgreesWithSubsetEnumeration) {
  for (const Graph& g : graphs_up_to(5)) {
    VertexSetResult r = alpha(g);
    ASSERT_EQ(r.value, oracle::alpha(g));
    ASSERT_EQ(static_cast<int>(r.vertices.size()), r.value);
    ASSERT_FALSE(check_independent_set(g, r.vertices));
  }
}

TEST(Chi, Examples) {
  EXPECT_EQ(chi(complete(3)).value, 3);
  EXPECT_EQ(chi(cycle(5)).value, 3);
  EXPECT_EQ(chi(empty(4)).value, 1);
}

TEST(Chi, AgreesWithAssignmentEnumeration) {
  for (const Graph& g : graphs_up_to(5)) {
    ColoringResult r = chi(g);
    ASSERT_EQ(r.value, oracle::chi(g));
    ASSERT_FALSE(check_proper_coloring(g, r.color));
    ASSERT_EQ(*std::max_element(r.color.begin(), r.color.end()) + 1, r.value);
  }
}

TEST(Chi, GreedyColoringIsProperAndFollowsTheOrder) {
  Graph c5 = cycle(5);
  std::vector<int> c = greedy_coloring(c5);
  EXPECT_FALSE(check_proper_coloring(c5, c));
  std::vector<int> order = {4, 3, 2, 1, 0};
  std::vector<int> r = greedy_coloring(c5, order);
  EXPECT_EQ(r[4], 0);
  EXPECT_FALSE(check_proper_coloring(c5, r));
}

TEST(Im, Examples) {
  EXPECT_EQ(im(make_graph(4, {{0, 1}, {2, 3}})).value, 2);
  EXPECT_EQ(im(cycle(4)).value, 1);
  EXPECT_EQ(im(undirected_view(bip_e(complete(3)))).value, 1);
}

TEST(Im, AgreesWithEdgeSubsetEnumeration) {
  for (const Graph& g : graphs_up_to(5)) {
    MatchingResult r = im(g);
    ASSERT_EQ(r.value, oracle::im(g));
    ASSERT_FALSE(check_induced_matching(g, r.matching));
    ASSERT_TRUE(oracle::is_induced_matching(g, r.matching.pairs));
  }
}

TEST(SimSigma, Examples) {
  Graph two = make_graph(4, {{0, 1}, {2, 3}});
  oracle::for_each_order(4, [&](const TotalOrder& s) { ASSERT_EQ(sim_sigma(two, s).value, 2); });
  Graph p4 = path(4);
  MatchingResult r = sim_sigma(p4, TotalOrder::identity(4));
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.matching, (Matching{{{0, 1}, {2, 3}}}));
  oracle::for_each_order(4, [&](const TotalOrder& s) { ASSERT_EQ(sim_sigma(cycle(4), s).value, 1); });
}

TEST(SimSigma, AgreesWithEnumerationOnEveryOrder) {
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      oracle::for_each_order(n, [&](const TotalOrder& s) {
        MatchingResult r = sim_sigma(g, s);
        ASSERT_EQ(r.value, oracle::sim_sigma(g, s));
        ASSERT_TRUE(oracle::is_semi_induced(g, r.matching.pairs, s));
      });
    }
  }
}

TEST(SimSigma, RejectsMismatchedOrder) {
  EXPECT_THROW(sim_sigma(cycle(4), TotalOrder::identity(3)), InvalidInput);
}

TEST(Sim, Examples) {
  EXPECT_EQ(sim(path(4)).value, 2);
  EXPECT_EQ(sim(undirected_view(bip_e(complete(2)))).value, 1);
  EXPECT_EQ(sim(empty(3)).value, 0);
}

TEST(Sim, AgreesWithMaximumOverAllOrders) {
  for (const Graph& g : graphs_up_to(5)) {
    MatchingResult r = sim(g);
    ASSERT_EQ(r.value, oracle::sim(g));
    ASSERT_TRUE(r.order);
    ASSERT_TRUE(oracle::is_semi_induced(g, r.matching.pairs, *r.order));
  }
}

TEST(Sim, AgreesWithMaximumOverAllOrdersOnRandomSixVertexGraphs) {
  Rng rng(2024);
  for (int t = 0; t < 25; ++t) {
    Graph g = random_graph(6, Rational(1, 2), rng);
    ASSERT_EQ(sim(g).value, oracle::sim(g));
  }
}

TEST(Sim, LargeHostCertificateMatchesSimSigmaOfItsOrder) {
  Graph host = undirected_view(bip(product(ProductKind::disjunctive, cycle(5), cycle(5))));
  MatchingResult r = sim(host);
  EXPECT_EQ(r.value, 6);
  EXPECT_FALSE(check_semi_induced_matching(host, r.matching, *r.order));
  EXPECT_EQ(sim_sigma(host, *r.order).value, r.value);
  EXPECT_GE(r.value, im(host).value);
}

TEST(Dim, Examples) {
  EXPECT_EQ(dim(chain(2)).value, 1);
  EXPECT_EQ(dim(antichain(2)).value, 2);
  DimResult s3 = dim(bip(complete(3)));
  EXPECT_EQ(s3.value, 3);
  EXPECT_TRUE(oracle::realizes(bip(complete(3)), s3.realizer));
  EXPECT_EQ(dim(antichain(1)).value, 1);
}

TEST(Dim, AgreesWithLinearExtensionCover) {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const int n = rng.between(1, 6);
    std::vector<Edge> rel;
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (rng.bernoulli(Rational(1, 3))) rel.push_back({x, y});
      }
    }
    Poset p = make_poset(n, rel);
    DimResult r = dim(p);
    ASSERT_EQ(r.value, oracle::dim(p)) << "trial " << t;
    ASSERT_TRUE(oracle::realizes(p, r.realizer));
    ASSERT_EQ(r.realizer.d, r.value);
  }
}

TEST(Dim, AdjacencyPosetsOfSmallGraphs) {
  for (const Graph& g : graphs_up_to(3)) {
    for (const Poset& p : {bip(g), bip_e(g)}) {
      DimResult r = dim(p);
      ASSERT_EQ(r.value, oracle::dim(p));
      ASSERT_TRUE(oracle::realizes(p, r.realizer));
    }
  }
}

TEST(Mes, Examples) {
  MesInstance a{2, {{0}, {0, 1}}};
  SequenceResult r = mes_solve(a);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.sequence, (std::vector<int>{0, 1}));
  EXPECT_EQ(mes_solve(MesInstance{1, {{0}, {0}}}).value, 1);
  EXPECT_EQ(mes_solve(MesInstance{0, {}}).value, 0);
}

TEST(Mes, AgreesWithOrderingEnumeration) {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    MesInstance inst;
    inst.ground = rng.between(1, 5);
    const int m = rng.between(0, 5);
    for (int i = 0; i < m; ++i) {
      std::vector<int> s;
      for (int e = 0; e < inst.ground; ++e) {
        if (rng.bernoulli(Rational(1, 2))) s.push_back(e);
      }
      inst.sets.push_back(s);
    }
    SequenceResult r = mes_solve(inst);
    ASSERT_EQ(r.value, oracle::mes(inst));
    ASSERT_FALSE(check_expanding_sequence(inst, r.sequence));
  }
}

TEST(Mes, ValidationAndSequenceChecks) {
  EXPECT_THROW(validate_mes(MesInstance{2, {{0, 2}}}), InvalidInput);
  EXPECT_THROW(validate_mes(MesInstance{2, {{1, 1}}}), InvalidInput);
  MesInstance a{2, {{0}, {0, 1}}};
  EXPECT_TRUE(check_expanding_sequence(a, std::vector<int>{1, 0}).has_value());
  EXPECT_TRUE(check_expanding_sequence(a, std::vector<int>{0, 0}).has_value());
  EXPECT_FALSE(check_expanding_sequence(a, std::vector<int>{0, 1}).has_value());
}

TEST(Caps, EverySolverRefusesOversizedInputs) {
  SolverCaps tiny;
  tiny.alpha = tiny.chi = tiny.im = tiny.sim_sigma = tiny.sim = tiny.dim = tiny.mes = 3;
  Graph g = cycle(4);
  EXPECT_THROW(alpha(g, tiny), CapExceeded);
  EXPECT_THROW(chi(g, tiny), CapExceeded);
  EXPECT_THROW(im(g, tiny), CapExceeded);
  EXPECT_THROW(sim(g, tiny), CapExceeded);
  EXPECT_THROW(sim_sigma(g, TotalOrder::identity(4), tiny), CapExceeded);
  EXPECT_THROW(dim(antichain(4), tiny), CapExceeded);
  EXPECT_THROW(mes_solve(MesInstance{1, {{0}, {0}, {0}, {0}}}, tiny), CapExceeded);
}

TEST(OrderForSequence, DesignatedEdgesComeFirst) {
  std::vector<Edge> seq = {{3, 1}, {0, 2}};
  TotalOrder s = order_for_sequence(5, seq);
  EXPECT_EQ(s.sequence(), (std::vector<int>{3, 0, 1, 2, 4}));
}
