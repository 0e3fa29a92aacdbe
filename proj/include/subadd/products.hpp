#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "subadd/graph.hpp"

namespace subadd {

enum class ProductKind { tensor, extended_tensor, disjunctive, lexicographic };

std::string_view to_string(ProductKind kind);
// Accepts the names above plus "extended-tensor". Throws InvalidInput.
ProductKind parse_product_kind(std::string_view name);

// Vertex (u, a) gets index u * H.order() + a.
Graph product(ProductKind kind, const Graph& g, const Graph& h);

// (u,p) < (v,q) iff (uv in E(G) or u == v) and p < q. Index u * P.order() + p.
// Throws InvalidInput unless P is height-two.
Poset extended_tensor_poset(const Graph& g, const Poset& p);

// Vertex (u, i) gets index i * n + u; layer i = 0 is the minimal layer.
Poset bip(const Graph& g);
Poset bip_e(const Graph& g);

// Forgets orientation.
Graph undirected_view(const Poset& p);

inline constexpr std::uint64_t kDefaultFoldCap = 4096;

// Left-associated k-fold power. Throws CapExceeded when n^k > cap.
Graph k_fold(ProductKind kind, const Graph& g, int k, std::uint64_t cap = kDefaultFoldCap);

Graph complete(int n);
Graph empty(int n);
Graph path(int n);
Graph cycle(int n);

// U = 0..size_u-1, V = size_u..size_u+size_v-1, every U -> V pair.
Poset complete_bipartite_poset(int size_u, int size_v);
// Same order on an arbitrary labelling: side[x] == 0 puts x in U, 1 in V.
Poset complete_bipartite_poset(std::span<const int> side);
Poset chain(int n);
Poset antichain(int n);

}  // namespace subadd
