#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "subadd/graph.hpp"

namespace subadd {

struct BlockLayout {
  int d_g = 0;
  int k = 0;
  int d_h = 0;
  int total() const { return d_g + k * d_h; }
  // First coordinate of block b (b = 0 is the G block, 1..k the color blocks).
  int block_start(int b) const { return b == 0 ? 0 : d_g + (b - 1) * d_h; }
};

struct DecompositionPart {
  Graph host;
  Matching matching;
  std::optional<TotalOrder> order;
};

struct DecompositionWitness {
  DecompositionPart first;   // lives in G x J
  DecompositionPart second;  // lives in H x J
  std::size_t original_size = 0;
};

// Test hook for harness self-checks: the decomposition drops one edge from
// the first part (or the second when the first is empty).
enum class DecompositionFault { none, drop_edge };

// M must be an induced matching of (G v H) x J (tensor with J). Each edge of
// M is assigned to the first part when its G-coordinates are adjacent and to
// the second part otherwise, then projected onto G x J or H x J.
DecompositionWitness decompose_induced_matching(const Graph& g, const Graph& h, const Graph& j,
                                                const Matching& m,
                                                DecompositionFault fault = DecompositionFault::none);

// Same split for a sigma-semi-induced M. Projected vertices of matched edges
// inherit sigma of their preimage; unmatched vertices follow in index order.
DecompositionWitness decompose_semi_induced(const Graph& g, const Graph& h, const Graph& j,
                                            const Matching& m, const TotalOrder& sigma,
                                            DecompositionFault fault = DecompositionFault::none);

struct CheckedRealizer {
  Realizer realizer;
  bool relaxed = false;  // true when the map is not injective
};

struct LexRealizer {
  Realizer realizer;
  BlockLayout layout;
};

// Realizer of bip_e(G . H) from realizers of bip_e(G), bip_e(H) and a proper
// coloring of G. Output dimension d_G + k * d_H with k = max color + 1.
LexRealizer build_realizer_lex(const Graph& g, const Graph& h, const Realizer& phi_g,
                               const Realizer& phi_h, std::span<const int> coloring);

// phi'(v, p) = phi(p) on K_L x_e P (index v * |P| + p).
CheckedRealizer absorb_complete(int l, const Poset& p, const Realizer& phi);

// phi is a realizer of bip_e(A) (= A x_e directed K2, layer-major indices).
// Returns phi'(a, i) = phi(a, side(i)) on A x_e K_{U,V}, index a * |U+V| + i.
CheckedRealizer lift_K2_to_KUV(const Graph& a, const Realizer& phi, int size_u, int size_v);
// Same with an arbitrary labelling of the K_{U,V} elements (side 0 = U).
CheckedRealizer lift_K2_to_KUV(const Graph& a, const Realizer& phi, std::span<const int> side);

struct ConcatResult {
  Poset intersection;
  CheckedRealizer result;
};

// Realizer of (V, E(P1) & E(P2)) with dimension d1 + d2.
ConcatResult concat_realizers(const Poset& p1, const Realizer& phi1, const Poset& p2,
                              const Realizer& phi2);

struct PosetDecomposition {
  std::vector<int> side;  // per element of P: 0 = U, 1 = V
  Poset kuv_part;         // A x_e K_{U,V}
  Poset complete_part;    // K_|A| x_e P
};

// Elements of P that are both minimal and maximal are placed in U.
PosetDecomposition poset_decompose(const Graph& a, const Poset& p);

// Map over V(bip_e(G)) (layer-major) hitting exactly the independent set X.
std::vector<Rational> hit_map(const Graph& g, std::span<const int> x);
// psi hits u when psi(u,1) > psi(u,2) and psi(v,1) <= psi(w,2) for every edge vw.
bool hits(const Graph& g, std::span<const ExtCoord> psi, int u);

// Realizer of bip(G) of dimension d + k + 2.
Realizer extend_Be_realizer_to_B(const Graph& g, const Realizer& phi_e,
                                 std::span<const int> coloring);

// Color of u = first coordinate whose projection hits u.
std::vector<int> coloring_from_B_realizer(const Graph& g, const Realizer& phi);

// Makes a relaxed realizer of a height-two poset injective by appending two
// coordinates: minimal elements first in ascending then descending index order.
Realizer perturb(const Poset& p, const Realizer& phi);

struct Eq3Result {
  Realizer realizer;  // of (G . H) x_e P, index (u * |H| + a) * |P| + p
  int d_g = 0;
  int k = 0;
  int d_h = 0;
  int d_p = 0;
};

// Block construction, K2 lift, complete absorption and concatenation.
// phi_g, phi_h realize bip_e(G), bip_e(H); phi_p realizes P.
Eq3Result product_poset_realizer(const Graph& g, const Graph& h, const Poset& p,
                                 const Realizer& phi_g, const Realizer& phi_h,
                                 std::span<const int> coloring, const Realizer& phi_p);

}  // namespace subadd
