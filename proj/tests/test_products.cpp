#include <gtest/gtest.h>

#include "oracles.hpp"
#include "subadd/errors.hpp"
#include "subadd/products.hpp"

using namespace subadd;
using oracle::make_graph;
using oracle::make_poset;

namespace {

// Adjacency of the product vertex pairs straight from the definitions.
bool defined_adjacent(ProductKind kind, const Graph& g, const Graph& h, int u, int a, int v, int b) {
  const bool eg = u != v && g.adjacent(u, v);
  const bool eh = a != b && h.adjacent(a, b);
  switch (kind) {
    case ProductKind::tensor: return eg && eh;
    case ProductKind::disjunctive: return eg || eh;
    case ProductKind::lexicographic: return eg || (u == v && eh);
    case ProductKind::extended_tensor: return (eg || u == v) && eh;
  }
  return false;
}

}  // namespace

TEST(Product, TensorOfTwoEdges) {
  Graph k2 = complete(2);
  Graph t = product(ProductKind::tensor, k2, k2);
  // (0,0)=0 (0,1)=1 (1,0)=2 (1,1)=3
  EXPECT_EQ(t, make_graph(4, {{0, 3}, {1, 2}}));
}

TEST(Product, DisjunctiveWithAnEmptyFactor) {
  Graph d = product(ProductKind::disjunctive, complete(2), empty(2));
  EXPECT_EQ(d, make_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
}

TEST(Product, LexicographicOverAnEmptyBase) {
  Graph l = product(ProductKind::lexicographic, empty(2), complete(2));
  EXPECT_EQ(l, make_graph(4, {{0, 1}, {2, 3}}));
}

TEST(Product, AllKindsMatchTheirDefinitionsOnSmallGraphs) {
  std::vector<Graph> small;
  for (int n = 1; n <= 3; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) small.push_back(g);
  }
  for (ProductKind kind : {ProductKind::tensor, ProductKind::extended_tensor, ProductKind::disjunctive,
                           ProductKind::lexicographic}) {
    for (const Graph& g : small) {
      for (const Graph& h : small) {
        Graph p = product(kind, g, h);
        ASSERT_EQ(p.order(), g.order() * h.order());
        const int nh = h.order();
        for (int x = 0; x < p.order(); ++x) {
          for (int y = 0; y < p.order(); ++y) {
            if (x == y) continue;
            ASSERT_EQ(p.adjacent(x, y), defined_adjacent(kind, g, h, x / nh, x % nh, y / nh, y % nh))
                << to_string(kind) << " at " << x << "," << y;
          }
        }
      }
    }
  }
}

TEST(ExtendedTensor, CompleteEdgeTimesDirectedEdge) {
  Poset p = extended_tensor_poset(complete(2), chain(2));
  // (u,0) below (v,1) for all u, v: indices 0,2 minimal, 1,3 maximal.
  EXPECT_EQ(p, make_poset(4, {{0, 1}, {0, 3}, {2, 1}, {2, 3}}));
  EXPECT_TRUE(p.height_two());
}

TEST(ExtendedTensor, EmptyBaseGivesParallelChains) {
  EXPECT_EQ(extended_tensor_poset(empty(2), chain(2)), make_poset(4, {{0, 1}, {2, 3}}));
}

TEST(ExtendedTensor, RejectsTallPosets) {
  EXPECT_THROW(extended_tensor_poset(path(3), chain(3)), InvalidInput);
}

TEST(ExtendedTensor, MatchesDefinitionOnSmallInputs) {
  std::vector<Poset> posets = {antichain(2), chain(2), complete_bipartite_poset(1, 2),
                               make_poset(4, {{0, 2}, {1, 2}, {1, 3}})};
  for (int n = 1; n <= 3; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      for (const Poset& q : posets) {
        Poset p = extended_tensor_poset(g, q);
        const int m = q.order();
        for (int x = 0; x < p.order(); ++x) {
          for (int y = 0; y < p.order(); ++y) {
            const int u = x / m, a = x % m, v = y / m, b = y % m;
            const bool expect = (u == v || g.adjacent(u, v)) && q.less(a, b);
            ASSERT_EQ(p.less(x, y), expect);
          }
        }
      }
    }
  }
}

TEST(Bip, SingleEdge) {
  // Layer-major: (u,0) = u, (u,1) = n + u.
  EXPECT_EQ(bip(complete(2)), make_poset(4, {{0, 3}, {1, 2}}));
  EXPECT_EQ(bip_e(complete(2)), complete_bipartite_poset(2, 2));
}

TEST(Bip, TriangleIsTheStandardExample) {
  Poset s3 = bip(complete(3));
  EXPECT_EQ(s3.order(), 6);
  EXPECT_EQ(s3.edges().size(), 6u);
  for (int u = 0; u < 3; ++u) {
    for (int v = 0; v < 3; ++v) EXPECT_EQ(s3.less(u, 3 + v), u != v);
  }
  EXPECT_TRUE(s3.height_two());
}

TEST(Bip, UndirectedViewKeepsComparabilities) {
  Graph g = undirected_view(bip_e(path(3)));
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.size(), bip_e(path(3)).edges().size());
  EXPECT_TRUE(g.adjacent(4, 0));
}

TEST(KFold, IdentityAndSquares) {
  EXPECT_EQ(k_fold(ProductKind::disjunctive, complete(2), 1), complete(2));
  Graph sq = k_fold(ProductKind::disjunctive, complete(2), 2);
  EXPECT_EQ(sq.order(), 4);
  EXPECT_EQ(oracle::alpha(sq), 1);
  EXPECT_EQ(k_fold(ProductKind::lexicographic, empty(2), 2), empty(4));
}

TEST(KFold, CapAndArguments) {
  EXPECT_THROW(k_fold(ProductKind::disjunctive, complete(3), 3, 26), CapExceeded);
  EXPECT_NO_THROW(k_fold(ProductKind::disjunctive, complete(3), 3, 27));
  EXPECT_THROW(k_fold(ProductKind::disjunctive, complete(3), 0), InvalidInput);
}

TEST(Builders, Basics) {
  EXPECT_EQ(complete(3).size(), 3u);
  EXPECT_EQ(empty(1).order(), 1);
  EXPECT_EQ(empty(1).size(), 0u);
  Poset k22 = complete_bipartite_poset(2, 2);
  EXPECT_EQ(k22.edges().size(), 4u);
  EXPECT_TRUE(k22.height_two());
  EXPECT_EQ(cycle(5).size(), 5u);
  EXPECT_EQ(path(4).size(), 3u);
  EXPECT_EQ(chain(3).edges().size(), 3u);
  EXPECT_EQ(antichain(3).edges().size(), 0u);
  std::vector<int> side = {1, 0, 1};
  Poset kuv = complete_bipartite_poset(side);
  EXPECT_TRUE(kuv.less(1, 0));
  EXPECT_TRUE(kuv.less(1, 2));
  EXPECT_EQ(kuv.edges().size(), 2u);
}

TEST(ProductKindNames, RoundTrip) {
  for (ProductKind k : {ProductKind::tensor, ProductKind::extended_tensor, ProductKind::disjunctive,
                        ProductKind::lexicographic}) {
    EXPECT_EQ(parse_product_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_product_kind("cartesian"), InvalidInput);
}
