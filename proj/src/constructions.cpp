#include "subadd/constructions.hpp"

#include <algorithm>
#include <set>

#include "subadd/errors.hpp"
#include "subadd/products.hpp"

namespace subadd {
namespace {

void require_realizer(const Poset& p, const Realizer& phi, const char* what,
                      RealizerCheck mode = RealizerCheck::strict) {
  auto verdict = verify_realizer(p, phi, mode);
  if (!verdict) throw InvalidInput(std::string(what) + ": " + verdict.violation->describe());
}

void require_coloring(const Graph& g, std::span<const int> coloring) {
  if (auto err = check_proper_coloring(g, coloring)) throw InvalidInput("coloring: " + *err);
}

int color_count(std::span<const int> coloring) {
  return coloring.empty() ? 0 : *std::max_element(coloring.begin(), coloring.end()) + 1;
}

bool injective(const Realizer& phi) {
  std::set<Point> seen(phi.coords.begin(), phi.coords.end());
  return seen.size() == phi.coords.size();
}

CheckedRealizer checked(const Poset& target, Realizer phi, const char* what) {
  CheckedRealizer out{std::move(phi), false};
  out.relaxed = !injective(out.realizer);
  auto mode = out.relaxed ? RealizerCheck::relaxed : RealizerCheck::strict;
  auto verdict = verify_realizer(target, out.realizer, mode);
  if (!verdict) {
    throw std::logic_error(std::string(what) + " produced an invalid realizer: " +
                           verdict.violation->describe());
  }
  return out;
}

// (u, x) -> u * n_x + x projections of a vertex of (G v H) x J.
struct ProductIndex {
  int nh;
  int nj;
  int u(int x) const { return x / nj / nh; }
  int a(int x) const { return (x / nj) % nh; }
  int j(int x) const { return x % nj; }
};

struct Split {
  DecompositionWitness witness;
  // Preimage edge (in M) of each projected edge, per part.
  std::vector<Edge> first_source;
  std::vector<Edge> second_source;
};

Split split_matching(const Graph& g, const Graph& h, const Graph& j, const Matching& m) {
  ProductIndex idx{h.order(), j.order()};
  Split s;
  s.witness.original_size = m.size();
  s.witness.first.host = product(ProductKind::tensor, g, j);
  s.witness.second.host = product(ProductKind::tensor, h, j);
  for (const Edge& e : m.pairs) {
    int u = idx.u(e.u), v = idx.u(e.v);
    if (u != v && g.adjacent(u, v)) {
      s.witness.first.matching.pairs.push_back({u * idx.nj + idx.j(e.u), v * idx.nj + idx.j(e.v)});
      s.first_source.push_back(e);
    } else {
      int a = idx.a(e.u), b = idx.a(e.v);
      s.witness.second.matching.pairs.push_back({a * idx.nj + idx.j(e.u), b * idx.nj + idx.j(e.v)});
      s.second_source.push_back(e);
    }
  }
  return s;
}

void apply_fault(DecompositionWitness& w, DecompositionFault fault) {
  if (fault != DecompositionFault::drop_edge) return;
  auto& pairs = !w.first.matching.pairs.empty() ? w.first.matching.pairs : w.second.matching.pairs;
  if (!pairs.empty()) pairs.pop_back();
}

// Matched projections take the rank of their preimage under sigma; the rest
// follow by index.
TotalOrder transfer_order(int n, const std::vector<Edge>& projected, const std::vector<Edge>& source,
                          const TotalOrder& sigma) {
  std::vector<std::pair<int, int>> keyed;  // (sigma rank of preimage, projected vertex)
  std::vector<bool> matched(n, false);
  for (std::size_t i = 0; i < projected.size(); ++i) {
    keyed.push_back({sigma.rank(source[i].u), projected[i].u});
    keyed.push_back({sigma.rank(source[i].v), projected[i].v});
    matched[projected[i].u] = matched[projected[i].v] = true;
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> seq;
  for (const auto& [key, v] : keyed) seq.push_back(v);
  for (int v = 0; v < n; ++v) {
    if (!matched[v]) seq.push_back(v);
  }
  return TotalOrder::from_sequence(seq);
}

}  // namespace

DecompositionWitness decompose_induced_matching(const Graph& g, const Graph& h, const Graph& j,
                                                const Matching& m, DecompositionFault fault) {
  Graph host = product(ProductKind::tensor, product(ProductKind::disjunctive, g, h), j);
  if (auto err = check_induced_matching(host, m)) throw InvalidInput("not an induced matching: " + *err);
  Split s = split_matching(g, h, j, m);
  for (const auto* part : {&s.witness.first, &s.witness.second}) {
    if (auto err = check_induced_matching(part->host, part->matching)) {
      throw std::logic_error("projected part is not induced: " + *err);
    }
  }
  apply_fault(s.witness, fault);
  return std::move(s.witness);
}

DecompositionWitness decompose_semi_induced(const Graph& g, const Graph& h, const Graph& j,
                                            const Matching& m, const TotalOrder& sigma,
                                            DecompositionFault fault) {
  Graph host = product(ProductKind::tensor, product(ProductKind::disjunctive, g, h), j);
  if (auto err = check_semi_induced_matching(host, m, sigma)) {
    throw InvalidInput("not a semi-induced matching: " + *err);
  }
  Split s = split_matching(g, h, j, m);
  auto& w = s.witness;
  w.first.order = transfer_order(w.first.host.order(), w.first.matching.pairs, s.first_source, sigma);
  w.second.order = transfer_order(w.second.host.order(), w.second.matching.pairs, s.second_source, sigma);
  for (const auto* part : {&w.first, &w.second}) {
    if (auto err = check_semi_induced_matching(part->host, part->matching, *part->order)) {
      throw std::logic_error("projected part is not semi-induced: " + *err);
    }
  }
  apply_fault(w, fault);
  return std::move(s.witness);
}

LexRealizer build_realizer_lex(const Graph& g, const Graph& h, const Realizer& phi_g,
                               const Realizer& phi_h, std::span<const int> coloring) {
  require_realizer(bip_e(g), phi_g, "realizer of bip_e(G)");
  require_realizer(bip_e(h), phi_h, "realizer of bip_e(H)");
  require_coloring(g, coloring);
  const int ng = g.order(), nh = h.order(), n = ng * nh;
  BlockLayout layout{phi_g.d, color_count(coloring), phi_h.d};

  // Filler zeros must sit strictly below every finite coordinate of phi_h.
  Rational low(1);
  for (const Point& p : phi_h.coords) {
    for (const ExtCoord& c : p) {
      if (!c.is_infinite() && c.value() < low) low = c.value();
    }
  }
  const Rational shift = low > 0 ? Rational(0) : Rational(1) - low;

  Realizer out;
  out.d = layout.total();
  out.coords.assign(2 * n, Point());
  for (int layer = 0; layer < 2; ++layer) {
    const ExtCoord filler = layer == 0 ? ExtCoord(0) : ExtCoord::infinity();
    for (int u = 0; u < ng; ++u) {
      for (int a = 0; a < nh; ++a) {
        Point p(out.d, filler);
        const Point& pg = phi_g.coords[layer * ng + u];
        std::copy(pg.begin(), pg.end(), p.begin());
        const Point& ph = phi_h.coords[layer * nh + a];
        int start = layout.block_start(coloring[u] + 1);
        for (int t = 0; t < layout.d_h; ++t) {
          p[start + t] = ph[t].is_infinite() ? ph[t] : ExtCoord(ph[t].value() + shift);
        }
        out.coords[layer * n + u * nh + a] = std::move(p);
      }
    }
  }
  auto verdict = verify_realizer(bip_e(product(ProductKind::lexicographic, g, h)), out);
  if (!verdict) throw std::logic_error("block realizer failed: " + verdict.violation->describe());
  return {std::move(out), layout};
}

namespace {

// K_L x_e P for any poset P: (v, p) < (w, q) iff p < q.
Poset complete_times(int l, const Poset& p) {
  const int np = p.order();
  std::vector<Edge> edges;
  for (int v = 0; v < l; ++v) {
    for (int w = 0; w < l; ++w) {
      for (const Edge& e : p.edges()) edges.push_back({v * np + e.u, w * np + e.v});
    }
  }
  return validate_poset(edges, l * np);
}

}  // namespace

CheckedRealizer absorb_complete(int l, const Poset& p, const Realizer& phi) {
  if (l < 1) throw InvalidInput("L must be positive");
  require_realizer(p, phi, "realizer of P");
  Realizer out;
  out.d = phi.d;
  for (int v = 0; v < l; ++v) {
    for (int x = 0; x < p.order(); ++x) out.coords.push_back(phi.coords[x]);
  }
  return checked(complete_times(l, p), std::move(out), "absorb_complete");
}

CheckedRealizer lift_K2_to_KUV(const Graph& a, const Realizer& phi, int size_u, int size_v) {
  if (size_u < 1 || size_v < 1) throw InvalidInput("U and V must be non-empty");
  std::vector<int> side(size_u, 0);
  side.resize(size_u + size_v, 1);
  return lift_K2_to_KUV(a, phi, side);
}

CheckedRealizer lift_K2_to_KUV(const Graph& a, const Realizer& phi, std::span<const int> side) {
  require_realizer(bip_e(a), phi, "realizer of A x_e K2");
  const int na = a.order(), np = static_cast<int>(side.size());
  Realizer out;
  out.d = phi.d;
  for (int x = 0; x < na; ++x) {
    for (int i = 0; i < np; ++i) {
      if (side[i] != 0 && side[i] != 1) throw InvalidInput("side labels must be 0 or 1");
      out.coords.push_back(phi.coords[side[i] * na + x]);
    }
  }
  return checked(extended_tensor_poset(a, complete_bipartite_poset(side)), std::move(out),
                 "lift_K2_to_KUV");
}

ConcatResult concat_realizers(const Poset& p1, const Realizer& phi1, const Poset& p2,
                              const Realizer& phi2) {
  if (p1.order() != p2.order()) throw InvalidInput("posets live on different vertex sets");
  require_realizer(p1, phi1, "first realizer", RealizerCheck::relaxed);
  require_realizer(p2, phi2, "second realizer", RealizerCheck::relaxed);
  std::vector<Edge> both;
  std::set_intersection(p1.edges().begin(), p1.edges().end(), p2.edges().begin(), p2.edges().end(),
                        std::back_inserter(both));
  Poset meet = validate_poset(both, p1.order());
  Realizer out;
  out.d = phi1.d + phi2.d;
  for (int x = 0; x < p1.order(); ++x) {
    Point p = phi1.coords[x];
    p.insert(p.end(), phi2.coords[x].begin(), phi2.coords[x].end());
    out.coords.push_back(std::move(p));
  }
  CheckedRealizer result = checked(meet, std::move(out), "concat_realizers");
  return {std::move(meet), std::move(result)};
}

PosetDecomposition poset_decompose(const Graph& a, const Poset& p) {
  if (!p.height_two()) throw InvalidInput("poset_decompose needs a height-two poset");
  PosetDecomposition d;
  for (int x = 0; x < p.order(); ++x) d.side.push_back(p.minimal(x) ? 0 : 1);
  d.kuv_part = extended_tensor_poset(a, complete_bipartite_poset(d.side));
  d.complete_part = extended_tensor_poset(complete(a.order()), p);
  std::vector<Edge> both;
  std::set_intersection(d.kuv_part.edges().begin(), d.kuv_part.edges().end(),
                        d.complete_part.edges().begin(), d.complete_part.edges().end(),
                        std::back_inserter(both));
  if (both != extended_tensor_poset(a, p).edges()) {
    throw std::logic_error("poset decomposition does not intersect to A x_e P");
  }
  return d;
}

std::vector<Rational> hit_map(const Graph& g, std::span<const int> x) {
  if (auto err = check_independent_set(g, x)) throw InvalidInput("hit set: " + *err);
  const int n = g.order();
  std::vector<Rational> psi(2 * n);
  std::vector<bool> in(n, false);
  for (int v : x) in[v] = true;
  for (int u = 0; u < n; ++u) {
    psi[u] = in[u] ? 2 : 0;
    psi[n + u] = in[u] ? 1 : 3;
  }
  std::vector<ExtCoord> as_coords(psi.begin(), psi.end());
  for (int u = 0; u < n; ++u) {
    if (hits(g, as_coords, u) != in[u]) throw std::logic_error("hit map misses its target set");
  }
  return psi;
}

bool hits(const Graph& g, std::span<const ExtCoord> psi, int u) {
  const int n = g.order();
  if (!(psi[u] > psi[n + u])) return false;
  for (const Edge& e : g.edges()) {
    if (psi[e.u] > psi[n + e.v] || psi[e.v] > psi[n + e.u]) return false;
  }
  return true;
}

Realizer extend_Be_realizer_to_B(const Graph& g, const Realizer& phi_e,
                                 std::span<const int> coloring) {
  require_realizer(bip_e(g), phi_e, "realizer of bip_e(G)");
  require_coloring(g, coloring);
  const int n = g.order(), k = color_count(coloring);
  Realizer out = phi_e;
  out.d = phi_e.d + k + 2;
  for (int c = 0; c < k; ++c) {
    std::vector<int> cls;
    for (int u = 0; u < n; ++u) {
      if (coloring[u] == c) cls.push_back(u);
    }
    auto psi = hit_map(g, cls);
    for (int x = 0; x < 2 * n; ++x) out.coords[x].push_back(psi[x]);
  }
  // Two extensions of bip(G) that disagree on every same-layer pair.
  for (int layer = 0; layer < 2; ++layer) {
    for (int u = 0; u < n; ++u) {
      Point& p = out.coords[layer * n + u];
      p.push_back(ExtCoord(layer * n + u));
      p.push_back(ExtCoord(layer * n + (n - 1 - u)));
    }
  }
  auto verdict = verify_realizer(bip(g), out);
  if (!verdict) throw std::logic_error("extended realizer failed: " + verdict.violation->describe());
  return out;
}

std::vector<int> coloring_from_B_realizer(const Graph& g, const Realizer& phi) {
  require_realizer(bip(g), phi, "realizer of bip(G)");
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::vector<ExtCoord> column(2 * n);
  for (int q = 0; q < phi.d; ++q) {
    for (int x = 0; x < 2 * n; ++x) column[x] = phi.coords[x][q];
    for (int u = 0; u < n; ++u) {
      if (color[u] == -1 && hits(g, column, u)) color[u] = q;
    }
  }
  for (int u = 0; u < n; ++u) {
    if (color[u] == -1) throw std::logic_error("no coordinate hits vertex " + std::to_string(u));
  }
  if (auto err = check_proper_coloring(g, color)) throw std::logic_error("derived coloring: " + *err);
  return color;
}

Realizer perturb(const Poset& p, const Realizer& phi) {
  if (!p.height_two()) throw InvalidInput("perturb needs a height-two poset");
  require_realizer(p, phi, "realizer to perturb", RealizerCheck::relaxed);
  const int n = p.order();
  std::vector<int> bottoms, tops;
  for (int x = 0; x < n; ++x) (p.minimal(x) ? bottoms : tops).push_back(x);
  Realizer out = phi;
  out.d = phi.d + 2;
  for (auto& pt : out.coords) pt.resize(out.d);
  const int nb = static_cast<int>(bottoms.size()), nt = static_cast<int>(tops.size());
  for (int i = 0; i < nb; ++i) {
    out.coords[bottoms[i]][phi.d] = ExtCoord(i);
    out.coords[bottoms[i]][phi.d + 1] = ExtCoord(nb - 1 - i);
  }
  for (int i = 0; i < nt; ++i) {
    out.coords[tops[i]][phi.d] = ExtCoord(nb + i);
    out.coords[tops[i]][phi.d + 1] = ExtCoord(nb + nt - 1 - i);
  }
  auto verdict = verify_realizer(p, out);
  if (!verdict) throw std::logic_error("perturbation failed: " + verdict.violation->describe());
  return out;
}

Eq3Result product_poset_realizer(const Graph& g, const Graph& h, const Poset& p,
                                 const Realizer& phi_g, const Realizer& phi_h,
                                 std::span<const int> coloring, const Realizer& phi_p) {
  require_realizer(p, phi_p, "realizer of P");
  Graph a = product(ProductKind::lexicographic, g, h);
  LexRealizer lex = build_realizer_lex(g, h, phi_g, phi_h, coloring);
  PosetDecomposition dec = poset_decompose(a, p);
  CheckedRealizer lifted = lift_K2_to_KUV(a, lex.realizer, dec.side);
  CheckedRealizer absorbed = absorb_complete(a.order(), p, phi_p);
  ConcatResult joined =
      concat_realizers(dec.kuv_part, lifted.realizer, dec.complete_part, absorbed.realizer);
  auto verdict = verify_realizer(extended_tensor_poset(a, p), joined.result.realizer);
  if (!verdict) throw std::logic_error("pipeline realizer failed: " + verdict.violation->describe());
  return {std::move(joined.result.realizer), lex.layout.d_g, lex.layout.k, lex.layout.d_h, phi_p.d};
}

}  // namespace subadd
