#include "subadd/harness.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <sstream>

#include "subadd/errors.hpp"
#include "subadd/products.hpp"

namespace subadd {

// ---- randomness ----

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix(splitmix(master + kGolden) ^ splitmix((index + 1) * kGolden));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % bound;
}

bool Rng::bernoulli(const Rational& p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  const BigInt& den = boost::multiprecision::denominator(p);
  if (den > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw InvalidInput("probability denominator exceeds 64 bits");
  }
  auto draw = below(static_cast<std::uint64_t>(den));
  return BigInt(draw) < boost::multiprecision::numerator(p);
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[below(i + 1)]);
  return perm;
}

Graph random_graph(int n, const Rational& p, Rng& rng) {
  if (p < 0 || p > 1) throw InvalidInput("edge probability must lie in [0,1]");
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (rng.bernoulli(p)) edges.push_back({x, y});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_graph(int n, const Rational& p, std::uint64_t seed) {
  Rng rng(seed);
  return random_graph(n, p, rng);
}

Poset random_height_two_poset(int n, Rng& rng) {
  std::vector<bool> top(n);
  for (int x = 0; x < n; ++x) top[x] = rng.bernoulli(Rational(1, 2));
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!top[x] && top[y] && rng.bernoulli(Rational(1, 2))) edges.push_back({x, y});
    }
  }
  return validate_poset(edges, n);
}

// ---- names ----

namespace {

struct InequalityName {
  Inequality id;
  std::string_view name;
};

constexpr InequalityName kInequalityNames[] = {
    {Inequality::im, "im"},
    {Inequality::sim, "sim"},
    {Inequality::dim, "dim"},
    {Inequality::alpha_mult, "alpha-mult"},
    {Inequality::chi_power, "chi-power"},
    {Inequality::elbassioni, "elbassioni"},
    {Inequality::sim_upper, "sim-upper"},
    {Inequality::hj_bridge, "hj-bridge"},
    {Inequality::mrfs, "mrfs"},
    {Inequality::pricing, "pricing"},
    {Inequality::dcl, "dcl"},
    {Inequality::mes, "mes"},
};

}  // namespace

std::string_view to_string(Inequality id) {
  for (const auto& [i, name] : kInequalityNames) {
    if (i == id) return name;
  }
  return "?";
}

Inequality parse_inequality(std::string_view name) {
  for (const auto& [i, n] : kInequalityNames) {
    if (n == name) return i;
  }
  throw InvalidInput("unknown inequality id '" + std::string(name) + "'");
}

const std::vector<Inequality>& all_inequalities() {
  static const std::vector<Inequality> ids = [] {
    std::vector<Inequality> out;
    for (const auto& [i, name] : kInequalityNames) out.push_back(i);
    return out;
  }();
  return ids;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::skip: return "SKIP";
  }
  return "?";
}

// ---- per-instance checks ----

namespace {

// Collects failed requirements of one instance.
class Findings {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) problems_.push_back(what);
  }
  // A checker returned an error description.
  void require_valid(const std::optional<std::string>& err, const std::string& what) {
    if (err) problems_.push_back(what + ": " + *err);
  }

  CheckOutcome finish(Json lhs, Json rhs, Json certificates) const {
    CheckOutcome out;
    out.lhs = std::move(lhs);
    out.rhs = std::move(rhs);
    out.certificates = std::move(certificates);
    if (!problems_.empty()) {
      out.verdict = Verdict::fail;
      std::ostringstream note;
      for (std::size_t i = 0; i < problems_.size(); ++i) note << (i ? "; " : "") << problems_[i];
      out.note = note.str();
    }
    return out;
  }

 private:
  std::vector<std::string> problems_;
};

template <typename F>
CheckOutcome guarded(F&& body) {
  try {
    return body();
  } catch (const CapExceeded& e) {
    CheckOutcome out;
    out.verdict = Verdict::skip;
    out.note = e.what();
    return out;
  }
}

Json rational_json(const Rational& r) { return format_rational(r); }

int ceil_log2(int n) {
  int l = 0;
  while ((1 << l) < n) ++l;
  return l;
}

}  // namespace

CheckOutcome check_im(const Graph& g, const Graph& h, const Graph& j, const SolverCaps& caps,
                      DecompositionFault fault) {
  return guarded([&] {
    Graph host = product(ProductKind::tensor, product(ProductKind::disjunctive, g, h), j);
    Graph gj = product(ProductKind::tensor, g, j);
    Graph hj = product(ProductKind::tensor, h, j);
    MatchingResult lhs = im(host, caps);
    MatchingResult r1 = im(gj, caps);
    MatchingResult r2 = im(hj, caps);
    Findings f;
    f.require_valid(check_induced_matching(host, lhs.matching), "im certificate of (G v H) x J");
    f.require_valid(check_induced_matching(gj, r1.matching), "im certificate of G x J");
    f.require_valid(check_induced_matching(hj, r2.matching), "im certificate of H x J");
    DecompositionWitness w = decompose_induced_matching(g, h, j, lhs.matching, fault);
    const auto s1 = static_cast<int>(w.first.matching.size());
    const auto s2 = static_cast<int>(w.second.matching.size());
    f.require_valid(check_induced_matching(w.first.host, w.first.matching), "first part");
    f.require_valid(check_induced_matching(w.second.host, w.second.matching), "second part");
    f.require(static_cast<int>(w.original_size) <= s1 + s2, "decomposition loses edges: |M| > |M1| + |M2|");
    f.require(s1 <= r1.value && s2 <= r2.value, "a decomposition part beats the exact solver");
    f.require(lhs.value <= r1.value + r2.value, "im((G v H) x J) > im(G x J) + im(H x J)");
    return f.finish({{"im((G v H) x J)", lhs.value}},
                    {{"im(G x J)", r1.value}, {"im(H x J)", r2.value}, {"sum", r1.value + r2.value}},
                    {{"matching", write_matching(lhs.matching)},
                     {"first_part", write_matching(w.first.matching)},
                     {"second_part", write_matching(w.second.matching)}});
  });
}

CheckOutcome check_sim(const Graph& g, const Graph& h, const Graph& j, const TotalOrder& sigma,
                       const SolverCaps& caps, DecompositionFault fault) {
  return guarded([&] {
    Graph host = product(ProductKind::tensor, product(ProductKind::disjunctive, g, h), j);
    Graph gj = product(ProductKind::tensor, g, j);
    Graph hj = product(ProductKind::tensor, h, j);
    MatchingResult lhs = sim_sigma(host, sigma, caps);
    MatchingResult r1 = sim(gj, caps);
    MatchingResult r2 = sim(hj, caps);
    Findings f;
    f.require_valid(check_semi_induced_matching(host, lhs.matching, sigma), "sim_sigma certificate");
    f.require_valid(check_semi_induced_matching(gj, r1.matching, *r1.order), "sim certificate of G x J");
    f.require_valid(check_semi_induced_matching(hj, r2.matching, *r2.order), "sim certificate of H x J");
    DecompositionWitness w = decompose_semi_induced(g, h, j, lhs.matching, sigma, fault);
    const auto s1 = static_cast<int>(w.first.matching.size());
    const auto s2 = static_cast<int>(w.second.matching.size());
    f.require_valid(check_semi_induced_matching(w.first.host, w.first.matching, *w.first.order),
                    "first part under its transferred order");
    f.require_valid(check_semi_induced_matching(w.second.host, w.second.matching, *w.second.order),
                    "second part under its transferred order");
    f.require(static_cast<int>(w.original_size) <= s1 + s2, "decomposition loses edges: |M| > |M1| + |M2|");
    f.require(s1 <= r1.value && s2 <= r2.value, "a decomposition part beats the exact solver");
    f.require(lhs.value <= r1.value + r2.value, "sim_sigma((G v H) x J) > sim(G x J) + sim(H x J)");
    return f.finish({{"sim_sigma((G v H) x J)", lhs.value}},
                    {{"sim(G x J)", r1.value}, {"sim(H x J)", r2.value}, {"sum", r1.value + r2.value}},
                    {{"matching", write_matching(lhs.matching)},
                     {"first_part", write_matching(w.first.matching)},
                     {"first_order", write_order(*w.first.order)},
                     {"second_part", write_matching(w.second.matching)},
                     {"second_order", write_order(*w.second.order)}});
  });
}

CheckOutcome check_dim(const Graph& g, const Graph& h, const Poset& p, const SolverCaps& caps) {
  return guarded([&] {
    Graph a = product(ProductKind::lexicographic, g, h);
    Poset target = extended_tensor_poset(a, p);
    DimResult lhs = dim(target, caps);
    DimResult dgp = dim(extended_tensor_poset(g, p), caps);
    DimResult dhp = dim(extended_tensor_poset(h, p), caps);
    DimResult dp = dim(p, caps);
    ColoringResult cg = chi(g, caps);
    DimResult dg2 = dim(bip_e(g), caps);
    DimResult dh2 = dim(bip_e(h), caps);
    const int rhs = dgp.value + cg.value * dhp.value + dp.value;
    const int k2_bound = dg2.value + cg.value * dh2.value + dp.value;
    Eq3Result built = product_poset_realizer(g, h, p, dg2.realizer, dh2.realizer, cg.color, dp.realizer);
    Findings f;
    f.require(static_cast<bool>(verify_realizer(target, lhs.realizer)), "exact dim certificate");
    f.require_valid(check_proper_coloring(g, cg.color), "chi certificate");
    f.require(static_cast<bool>(verify_realizer(target, built.realizer)), "pipeline realizer");
    f.require(built.realizer.d <= k2_bound, "pipeline realizer exceeds d(G x_e K2) + chi(G) d(H x_e K2) + dim(P)");
    f.require(lhs.value <= built.realizer.d, "exact dimension exceeds the pipeline realizer");
    f.require(lhs.value <= rhs, "dim((G.H) x_e P) > dim(G x_e P) + chi(G) dim(H x_e P) + dim(P)");
    return f.finish({{"dim((G.H) x_e P)", lhs.value}},
                    {{"dim(G x_e P)", dgp.value},
                     {"chi(G)", cg.value},
                     {"dim(H x_e P)", dhp.value},
                     {"dim(P)", dp.value},
                     {"sum", rhs}},
                    {{"pipeline_dimension", built.realizer.d},
                     {"k2_bound", k2_bound},
                     {"blocks", {{"d_g", built.d_g}, {"k", built.k}, {"d_h", built.d_h}, {"d_p", built.d_p}}}});
  });
}

CheckOutcome check_alpha_mult(const Graph& g, const Graph& h, const SolverCaps& caps) {
  return guarded([&] {
    Graph gh = product(ProductKind::disjunctive, g, h);
    VertexSetResult lhs = alpha(gh, caps);
    VertexSetResult ag = alpha(g, caps);
    VertexSetResult ah = alpha(h, caps);
    std::vector<int> grid;
    for (int u : ag.vertices) {
      for (int a : ah.vertices) grid.push_back(u * h.order() + a);
    }
    Findings f;
    f.require_valid(check_independent_set(gh, lhs.vertices), "alpha certificate of G v H");
    f.require_valid(check_independent_set(gh, grid), "product of factor independent sets");
    f.require(lhs.value == ag.value * ah.value, "alpha(G v H) != alpha(G) alpha(H)");
    return f.finish({{"alpha(G v H)", lhs.value}},
                    {{"alpha(G)", ag.value}, {"alpha(H)", ah.value}, {"product", ag.value * ah.value}},
                    {{"independent_set", write_vertex_list(lhs.vertices)}});
  });
}

CheckOutcome check_chi_power(const Graph& g, int k, const SolverCaps& caps) {
  return guarded([&] {
    Graph gk = k_fold(ProductKind::lexicographic, g, k);
    ColoringResult lhs = chi(gk, caps);
    ColoringResult cg = chi(g, caps);
    const int envelope = std::max(1, ceil_log2(g.order()));
    Rational upper = pow(Rational(cg.value), static_cast<unsigned>(k));
    Rational lower = pow(Rational(cg.value, envelope), static_cast<unsigned>(k));
    Findings f;
    f.require_valid(check_proper_coloring(gk, lhs.color), "chi certificate of G^k");
    f.require(Rational(lhs.value) <= upper, "chi(G^k) > chi(G)^k");
    f.require(lower <= Rational(lhs.value), "chi(G^k) < (chi(G) / ceil(log2 n))^k");
    return f.finish({{"chi(G^k)", lhs.value}},
                    {{"chi(G)", cg.value}, {"k", k}, {"upper", rational_json(upper)},
                     {"lower", rational_json(lower)}, {"log_envelope", envelope}},
                    {{"coloring", write_vertex_list(lhs.color)}});
  });
}

CheckOutcome check_elbassioni(const Graph& g, const SolverCaps& caps) {
  return guarded([&] {
    Graph be = undirected_view(bip_e(g));
    VertexSetResult a = alpha(g, caps);
    MatchingResult rhs = im(be, caps);
    Matching diagonal;
    for (int u : a.vertices) diagonal.pairs.push_back({u, g.order() + u});
    Findings f;
    f.require_valid(check_independent_set(g, a.vertices), "alpha certificate");
    f.require_valid(check_induced_matching(be, rhs.matching), "im certificate");
    f.require_valid(check_induced_matching(be, diagonal), "diagonal matching over the independent set");
    f.require(a.value <= rhs.value, "alpha(G) > im(bip_e(G))");
    return f.finish({{"alpha(G)", a.value}}, {{"im(bip_e(G))", rhs.value}},
                    {{"diagonal_matching", write_matching(diagonal)}});
  });
}

CheckOutcome check_sim_upper(const Graph& g, const SolverCaps& caps) {
  return guarded([&] {
    Graph be = undirected_view(bip_e(g));
    Graph b = undirected_view(bip(g));
    MatchingResult lhs = sim(be, caps);
    MatchingResult sb = sim(b, caps);
    VertexSetResult a = alpha(g, caps);
    Findings f;
    f.require_valid(check_semi_induced_matching(be, lhs.matching, *lhs.order), "sim certificate of bip_e(G)");
    f.require_valid(check_semi_induced_matching(b, sb.matching, *sb.order), "sim certificate of bip(G)");
    // Edges of the bip_e witness that survive in bip(G) stay semi-induced there.
    Matching kept;
    for (const Edge& e : lhs.matching.pairs) {
      if (b.adjacent(e.u, e.v)) kept.pairs.push_back(e);
    }
    f.require_valid(check_semi_induced_matching(b, kept, *lhs.order), "restriction to bip(G)");
    f.require(static_cast<int>(kept.size()) <= sb.value, "restriction beats sim(bip(G))");
    f.require(lhs.value <= sb.value + a.value, "sim(bip_e(G)) > sim(bip(G)) + alpha(G)");
    return f.finish({{"sim(bip_e(G))", lhs.value}},
                    {{"sim(bip(G))", sb.value}, {"alpha(G)", a.value}, {"sum", sb.value + a.value}},
                    {{"matching", write_matching(lhs.matching)}, {"order", write_order(*lhs.order)}});
  });
}

CheckOutcome check_hj_bridge(const Graph& g, const SolverCaps& caps) {
  return guarded([&] {
    ColoringResult c = chi(g, caps);
    DimResult db = dim(bip(g), caps);
    DimResult de = dim(bip_e(g), caps);
    Findings f;
    f.require_valid(check_proper_coloring(g, c.color), "chi certificate");
    f.require(static_cast<bool>(verify_realizer(bip(g), db.realizer)), "dim certificate of bip(G)");
    f.require(static_cast<bool>(verify_realizer(bip_e(g), de.realizer)), "dim certificate of bip_e(G)");
    std::vector<int> derived = coloring_from_B_realizer(g, db.realizer);
    std::vector<int> distinct = derived;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    f.require_valid(check_proper_coloring(g, derived), "coloring read off the bip(G) realizer");
    f.require(static_cast<int>(distinct.size()) <= db.value, "derived coloring uses more than d colors");
    Realizer extended = extend_Be_realizer_to_B(g, de.realizer, c.color);
    f.require(static_cast<bool>(verify_realizer(bip(g), extended)), "extended bip_e realizer");
    f.require(c.value <= db.value, "chi(G) > dim(bip(G))");
    f.require(db.value <= de.value + c.value, "dim(bip(G)) > dim(bip_e(G)) + chi(G)");
    return f.finish({{"chi(G)", c.value}, {"dim(bip(G))", db.value}},
                    {{"dim(bip(G))", db.value}, {"dim(bip_e(G))", de.value}, {"sum", de.value + c.value}},
                    {{"derived_coloring", write_vertex_list(derived)},
                     {"extended_dimension", extended.d}});
  });
}

CheckOutcome check_mrfs(const Bipartite& g, const Rational& beta, const SolverCaps& caps) {
  return guarded([&] {
    MrfsInstance inst = mrfs_build(g, beta);
    MatchingResult best = im(g.graph, caps);
    MatchingResult upper = sim(g.graph, caps);
    Findings f;
    std::vector<Rational> x = mrfs_from_matching(inst, best.matching);
    const int forward = mrfs_eval(inst, x, Rational(1));
    f.require(forward >= best.value, "forward solution satisfies fewer than im(G) constraints");
    f.require(mrfs_eval(inst, x, beta) >= best.value, "forward solution is not beta-feasible");
    const auto grid = mrfs_grid(inst);
    const int n = inst.n();
    std::vector<int> digit(n, 0);
    std::vector<Rational> y(n, grid[0]);
    int best_count = 0;
    long long vectors = 0;
    while (true) {
      ++vectors;
      const int count = mrfs_eval(inst, y, beta);
      best_count = std::max(best_count, count);
      SemiInducedCertificate rec = mrfs_recover(inst, y, beta);
      if (auto err = check_semi_induced_matching(g.graph, rec.matching, rec.sigma)) {
        f.require(false, "recovered matching is not semi-induced: " + *err);
        break;
      }
      if (static_cast<int>(rec.matching.size()) < count) {
        f.require(false, "recovered matching smaller than the satisfied count");
        break;
      }
      if (count > upper.value) {
        f.require(false, "a grid solution satisfies more than sim(G) constraints");
        break;
      }
      int i = 0;
      while (i < n && digit[i] + 1 == static_cast<int>(grid.size())) {
        digit[i] = 0;
        y[i] = grid[0];
        ++i;
      }
      if (i == n) break;
      y[i] = grid[++digit[i]];
    }
    f.require(best.value <= best_count, "best grid solution below im(G)");
    return f.finish({{"im(G)", best.value}, {"best_grid_count", best_count}},
                    {{"sim(G)", upper.value}},
                    {{"forward_count", forward}, {"forward_x", write_vector(x)}, {"grid_vectors", vectors}});
  });
}

CheckOutcome check_pricing(const Graph& g, const Graph& h, const SolverCaps& caps) {
  return guarded([&] {
    PricingInstance inst = pricing_build(g, h);
    MatchingResult best = im(inst.host, caps);
    MatchingResult upper = sim(inst.host, caps);
    const int slack = g.order() * (static_cast<int>(h.size()) + 1);
    PricePair forward = pricing_from_matching(inst, best.matching);
    Findings f;
    Json lhs = {{"im(G')", best.value}};
    Json rhs = {{"sim(G')", upper.value}, {"slack", slack}};
    Json certs = Json::object();
    for (PricingModel model : {PricingModel::udp_min, PricingModel::smp}) {
      const std::string tag(to_string(model));
      const PriceVector& p = forward.for_model(model);
      Rational rev = pricing_revenue(inst, p, model);
      for (const Edge& e : best.matching.pairs) {
        int grp = std::min(e.u, e.v);
        Rational paid = pricing_payment(inst, p, model, grp) * Rational(inst.groups[grp].multiplicity);
        f.require(paid == 1, tag + ": matched group " + std::to_string(grp) + " does not pay exactly 1");
      }
      f.require(rev >= Rational(best.value), tag + ": forward revenue below |M|");
      f.require(rev == Rational(best.value),
                tag + ": forward revenue " + format_rational(rev) + " != |M| = " + std::to_string(best.value));
      GridOptimum opt = pricing_grid_optimum(inst, model);
      PricingRecovery rec = pricing_recover(inst, opt.prices, model);
      f.require_valid(check_semi_induced_matching(inst.host, rec.certificate.matching, rec.certificate.sigma),
                      tag + ": recovered matching");
      const Rational rsize(static_cast<int>(rec.certificate.matching.size()));
      f.require(Rational(best.value) <= opt.revenue, tag + ": grid optimum below im(G')");
      f.require(rsize >= opt.revenue / 2 - slack, tag + ": recovered matching below R/2 - slack");
      f.require(rec.canonical_tight >= rec.tight - slack, tag + ": fewer canonical tight indices than tight - slack");
      f.require(opt.revenue <= Rational(2 * upper.value + 2 * slack), tag + ": grid optimum above 2 sim(G') + 2 slack");
      lhs[tag + "_forward_revenue"] = format_rational(rev);
      rhs[tag + "_grid_revenue"] = format_rational(opt.revenue);
      certs[tag] = {{"prices", write_prices(opt.prices)},
                    {"tight", rec.tight},
                    {"canonical_tight", rec.canonical_tight},
                    {"recovered", write_matching(rec.certificate.matching)}};
    }
    return f.finish(lhs, rhs, certs);
  });
}

CheckOutcome check_dcl(const Bipartite& g, const SolverCaps& caps) {
  return guarded([&] {
    DclInstance inst = dcl_build(g);
    MatchingResult lower = im(g.graph, caps);
    MatchingResult upper = sim(g.graph, caps);
    DclOptimum opt = dcl_opt(inst);
    Findings f;
    DclSolution fwd = dcl_forward(inst, lower.matching);
    f.require_valid(dcl_check(inst, fwd), "forward solution");
    f.require(fwd.satisfied() == lower.value, "forward solution does not satisfy |M| agents");
    f.require_valid(dcl_check(inst, opt.solution), "optimal solution");
    SemiInducedCertificate back = dcl_backward(inst, opt.solution);
    f.require_valid(check_semi_induced_matching(g.graph, back.matching, back.sigma), "backward matching");
    f.require(static_cast<int>(back.matching.size()) == opt.value, "backward matching size differs from OPT");
    f.require(lower.value <= opt.value, "im(G') > OPT");
    f.require(opt.value <= upper.value, "OPT > sim(G')");
    return f.finish({{"im(G')", lower.value}, {"dcl_opt", opt.value}},
                    {{"dcl_opt", opt.value}, {"sim(G')", upper.value}},
                    {{"forward", write_dcl_solution(fwd)},
                     {"optimum", write_dcl_solution(opt.solution)},
                     {"backward", write_matching(back.matching)}});
  });
}

CheckOutcome check_mes(const MesInstance& inst, const SolverCaps& caps) {
  return guarded([&] {
    MesGraph mg = mes_to_sim(inst);
    SequenceResult seq = mes_solve(inst, caps);
    MatchingResult sm = sim_sigma(mg.graph.graph, mg.sigma, caps);
    Findings f;
    f.require_valid(check_expanding_sequence(inst, seq.sequence), "expanding sequence");
    f.require_valid(check_semi_induced_matching(mg.graph.graph, sm.matching, mg.sigma), "sim_sigma certificate");
    // Sequence -> matching: each chosen set is matched to one of its new elements.
    Matching from_seq;
    std::vector<bool> seen(inst.ground, false);
    for (int i : seq.sequence) {
      int fresh = -1;
      for (int e : inst.sets[i]) {
        if (!seen[e] && fresh == -1) fresh = e;
      }
      for (int e : inst.sets[i]) seen[e] = true;
      if (fresh >= 0) from_seq.pairs.push_back({i, mg.graph.left + fresh});
    }
    f.require_valid(check_semi_induced_matching(mg.graph.graph, from_seq, mg.sigma), "sequence as a matching");
    // Matching -> sequence: the matched sets in order.
    std::vector<int> from_matching;
    for (const Edge& e : sm.matching.pairs) from_matching.push_back(std::min(e.u, e.v));
    std::sort(from_matching.begin(), from_matching.end());
    f.require_valid(check_expanding_sequence(inst, from_matching), "matching as a sequence");
    MesInstance back = sim_to_mes(mg.graph, mg.sigma);
    f.require(back == inst, "sim_to_mes does not invert mes_to_sim");
    SequenceResult back_seq = mes_solve(back, caps);
    f.require(seq.value == sm.value, "mes value != sim_sigma value");
    f.require(back_seq.value == sm.value, "reverse translation changes the value");
    return f.finish({{"mes", seq.value}}, {{"sim_sigma", sm.value}},
                    {{"sequence", write_sequence(seq.sequence)}, {"matching", write_matching(sm.matching)}});
  });
}

// ---- campaigns ----

bool TrialReport::excessive_skips() const {
  return !records.empty() && 5 * skips > static_cast<int>(records.size());
}

Json TrialReport::to_json() const {
  Json recs = Json::array();
  for (const TrialRecord& r : records) {
    recs.push_back({{"index", r.index},
                    {"seed", r.seed},
                    {"verdict", to_string(r.outcome.verdict)},
                    {"inputs", r.inputs},
                    {"lhs", r.outcome.lhs},
                    {"rhs", r.outcome.rhs},
                    {"certificates", r.outcome.certificates},
                    {"note", r.outcome.note}});
  }
  return {{"type", "trial-report"},
          {"inequality", to_string(config.id)},
          {"master_seed", config.seed},
          {"trials", records.size()},
          {"max_factor", config.max_factor},
          {"max_third", config.max_third},
          {"passes", passes},
          {"fails", fails},
          {"skips", skips},
          {"verdict", to_string(verdict())},
          {"excessive_skips", excessive_skips()},
          {"wall_seconds", wall_seconds},
          {"records", recs}};
}

namespace {

Graph sample_graph(Rng& rng, int max_n) {
  return random_graph(rng.between(1, std::max(1, max_n)), Rational(1, 2), rng);
}

Bipartite sample_bipartite(Rng& rng, int max_side) {
  int left = rng.between(1, std::max(1, max_side));
  int right = rng.between(1, std::max(1, max_side));
  std::vector<Edge> edges;
  for (int i = 0; i < left; ++i) {
    for (int j = 0; j < right; ++j) {
      if (rng.bernoulli(Rational(1, 2))) edges.push_back({i, j});
    }
  }
  return make_bipartite(left, right, edges);
}

// Draws the inputs of one trial as the JSON recorded in reports.
Json sample_inputs(Inequality id, int mf, int mt, Rng& rng) {
  switch (id) {
    case Inequality::im:
    case Inequality::sim: {
      Graph g = sample_graph(rng, mf), h = sample_graph(rng, mf), j = sample_graph(rng, mt);
      Json in = {{"G", write_graph(g)}, {"H", write_graph(h)}, {"J", write_graph(j)}};
      if (id == Inequality::sim) {
        in["sigma"] = write_order(TotalOrder::from_sequence(rng.permutation(g.order() * h.order() * j.order())));
      }
      return in;
    }
    case Inequality::dim: {
      Graph g = sample_graph(rng, mf), h = sample_graph(rng, mf);
      Poset p = random_height_two_poset(rng.between(1, std::max(1, mt)), rng);
      return {{"G", write_graph(g)}, {"H", write_graph(h)}, {"P", write_poset(p)}};
    }
    case Inequality::alpha_mult: {
      Graph g = sample_graph(rng, mf), h = sample_graph(rng, mf);
      return {{"G", write_graph(g)}, {"H", write_graph(h)}};
    }
    case Inequality::chi_power:
      return {{"G", write_graph(sample_graph(rng, mf))}, {"k", 2}};
    case Inequality::elbassioni:
    case Inequality::sim_upper:
    case Inequality::hj_bridge:
      return {{"G", write_graph(sample_graph(rng, mf))}};
    case Inequality::mrfs: {
      Bipartite g = sample_bipartite(rng, mf);
      Rational beta = rng.between(1, 2);
      if (beta * g.right < 2) beta = 2;
      return {{"G", write_bipartite(g)}, {"beta", format_rational(beta)}};
    }
    case Inequality::pricing: {
      Graph g = sample_graph(rng, std::min(mf, 3)), h = sample_graph(rng, std::min(mt, 2));
      return {{"G", write_graph(g)}, {"H", write_graph(h)}};
    }
    case Inequality::dcl:
      return {{"G", write_bipartite(sample_bipartite(rng, mf))}};
    case Inequality::mes: {
      MesInstance inst;
      inst.ground = rng.between(1, std::max(1, mt));
      int sets = rng.between(0, std::max(1, mf));
      for (int i = 0; i < sets; ++i) {
        std::vector<int> s;
        for (int e = 0; e < inst.ground; ++e) {
          if (rng.bernoulli(Rational(1, 2))) s.push_back(e);
        }
        inst.sets.push_back(std::move(s));
      }
      return {{"instance", write_mes(inst)}};
    }
  }
  throw std::logic_error("unhandled inequality");
}

}  // namespace

CheckOutcome run_check(Inequality id, const Json& inputs, const SolverCaps& caps, DecompositionFault fault) {
  using json_detail::field;
  auto graph = [&](const char* key) { return read_graph(field(inputs, key, "$")); };
  switch (id) {
    case Inequality::im:
      return check_im(graph("G"), graph("H"), graph("J"), caps, fault);
    case Inequality::sim:
      return check_sim(graph("G"), graph("H"), graph("J"), read_order(field(inputs, "sigma", "$")), caps, fault);
    case Inequality::dim:
      return check_dim(graph("G"), graph("H"), read_poset(field(inputs, "P", "$")), caps);
    case Inequality::alpha_mult:
      return check_alpha_mult(graph("G"), graph("H"), caps);
    case Inequality::chi_power: {
      auto k = json_detail::as_integer(field(inputs, "k", "$"), "$.k");
      if (k < 1 || k > 8) throw InvalidInput("$.k: power must lie in 1..8");
      return check_chi_power(graph("G"), static_cast<int>(k), caps);
    }
    case Inequality::elbassioni:
      return check_elbassioni(graph("G"), caps);
    case Inequality::sim_upper:
      return check_sim_upper(graph("G"), caps);
    case Inequality::hj_bridge:
      return check_hj_bridge(graph("G"), caps);
    case Inequality::mrfs:
      return check_mrfs(read_bipartite(field(inputs, "G", "$")),
                        json_detail::as_rational(field(inputs, "beta", "$"), "$.beta"), caps);
    case Inequality::pricing:
      return check_pricing(graph("G"), graph("H"), caps);
    case Inequality::dcl:
      return check_dcl(read_bipartite(field(inputs, "G", "$")), caps);
    case Inequality::mes:
      return check_mes(read_mes(field(inputs, "instance", "$")), caps);
  }
  throw std::logic_error("unhandled inequality");
}

namespace {

TrialRecord run_trial(const TrialConfig& cfg, int index) {
  TrialRecord rec;
  rec.index = index;
  rec.seed = trial_seed(cfg.seed, static_cast<std::uint64_t>(index));
  Rng rng(rec.seed);
  rec.inputs = sample_inputs(cfg.id, cfg.max_factor, cfg.max_third, rng);
  rec.outcome = run_check(cfg.id, rec.inputs, cfg.caps, cfg.fault);
  return rec;
}

}  // namespace

TrialReport verify_subadditivity(const TrialConfig& cfg) {
  if (cfg.trials < 0) throw InvalidInput("trial count must be non-negative");
  if (cfg.max_factor < 1 || cfg.max_third < 1) throw InvalidInput("size caps must be positive");
  if (cfg.only_trial && (*cfg.only_trial < 0 || *cfg.only_trial >= cfg.trials)) {
    throw InvalidInput("replayed trial index out of range");
  }
  const auto start = std::chrono::steady_clock::now();
  TrialReport report;
  report.config = cfg;
  for (int i = 0; i < cfg.trials; ++i) {
    if (cfg.only_trial && *cfg.only_trial != i) continue;
    TrialRecord rec = run_trial(cfg, i);
    switch (rec.outcome.verdict) {
      case Verdict::pass: ++report.passes; break;
      case Verdict::fail: ++report.fails; break;
      case Verdict::skip: ++report.skips; break;
    }
    report.records.push_back(std::move(rec));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---- amplification ----

std::string_view to_string(AmplifyMode mode) {
  return mode == AmplifyMode::matching ? "matching" : "dimension";
}

AmplifyMode parse_amplify_mode(std::string_view name) {
  if (name == "matching") return AmplifyMode::matching;
  if (name == "dimension") return AmplifyMode::dimension;
  throw InvalidInput("unknown amplify mode '" + std::string(name) + "'");
}

Json AmplifyReport::to_json() const {
  Json out = {{"type", "amplify-report"}, {"mode", to_string(mode)}, {"rows", rows}, {"ok", ok}};
  if (truncated) out["truncated"] = *truncated;
  return out;
}

AmplifyReport amplify_report(const Graph& g, int k, AmplifyMode mode, const SolverCaps& caps,
                             std::uint64_t fold_cap) {
  if (k < 1) throw InvalidInput("k must be positive");
  AmplifyReport report;
  report.mode = mode;
  if (mode == AmplifyMode::matching) {
    int alpha_g = 0;
    int sim_base = 0;
    for (int kk = 1; kk <= k; ++kk) {
      try {
        Graph gk = k_fold(ProductKind::disjunctive, g, kk, fold_cap);
        VertexSetResult a = alpha(gk, caps);
        if (kk == 1) alpha_g = a.value;
        Graph be = undirected_view(bip_e(gk));
        Graph b = undirected_view(bip(gk));
        MatchingResult ime = im(be, caps);
        MatchingResult sb = sim(b, caps);
        if (kk == 1) sim_base = sb.value;
        const int alpha_power = static_cast<int>(pow(Rational(alpha_g), kk).convert_to<long long>());
        const bool alpha_ok = a.value == alpha_power && !check_independent_set(gk, a.vertices);
        const bool im_ok = a.value <= ime.value && !check_induced_matching(be, ime.matching);
        const bool sim_ok = sb.value <= kk * sim_base &&
                            !check_semi_induced_matching(b, sb.matching, *sb.order);
        report.ok = report.ok && alpha_ok && im_ok && sim_ok;
        report.rows.push_back({{"k", kk},
                               {"vertices", gk.order()},
                               {"alpha", a.value},
                               {"alpha_power", alpha_power},
                               {"im_bip_e", ime.value},
                               {"sim_bip", sb.value},
                               {"sim_bound", kk * sim_base},
                               {"ok", alpha_ok && im_ok && sim_ok}});
      } catch (const CapExceeded& e) {
        report.truncated = "stopped at k=" + std::to_string(kk) + ": " + e.what();
        break;
      }
    }
    return report;
  }

  // Dimension mode.
  std::optional<ColoringResult> chi_g;
  std::optional<DimResult> dim_g;
  Realizer built;
  for (int kk = 1; kk <= k; ++kk) {
    try {
      Graph gk = k_fold(ProductKind::lexicographic, g, kk, fold_cap);
      if (kk == 1) {
        chi_g = chi(g, caps);
        dim_g = dim(bip_e(g), caps);
        built = dim_g->realizer;
      } else {
        Graph prev = k_fold(ProductKind::lexicographic, g, kk - 1, fold_cap);
        ColoringResult cprev = chi(prev, caps);
        built = build_realizer_lex(prev, g, built, dim_g->realizer, cprev.color).realizer;
      }
      ColoringResult ck = chi(gk, caps);
      const int envelope = std::max(1, ceil_log2(g.order()));
      const Rational upper = pow(Rational(chi_g->value), static_cast<unsigned>(kk));
      const Rational lower = pow(Rational(chi_g->value, envelope), static_cast<unsigned>(kk));
      const bool verified = static_cast<bool>(verify_realizer(bip_e(gk), built));
      const int claim = chi_g->value * dim_g->value * kk + kk;
      const bool within_claim = built.d <= claim;
      Json row = {{"k", kk},
                  {"vertices", gk.order()},
                  {"chi", ck.value},
                  {"chi_upper", format_rational(upper)},
                  {"chi_lower", format_rational(lower)},
                  {"constructed_dim", built.d},
                  {"constructed_verified", verified},
                  {"claim_bound", claim},
                  {"within_claim", within_claim}};
      bool row_ok = verified && Rational(ck.value) <= upper && lower <= Rational(ck.value);
      // The linear-in-k bound is only asserted where it provably holds.
      if (kk <= 2) row_ok = row_ok && within_claim;
      try {
        DimResult exact = dim(bip_e(gk), caps);
        row["dim_bip_e"] = exact.value;
        row_ok = row_ok && exact.value <= built.d;
      } catch (const CapExceeded& e) {
        row["dim_bip_e"] = nullptr;
        row["dim_note"] = e.what();
      }
      row["ok"] = row_ok;
      report.ok = report.ok && row_ok;
      report.rows.push_back(std::move(row));
    } catch (const CapExceeded& e) {
      report.truncated = "stopped at k=" + std::to_string(kk) + ": " + e.what();
      break;
    }
  }
  return report;
}

}  // namespace subadd
