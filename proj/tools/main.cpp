// Command-line front end. Every document is JSON; results go to --out or stdout.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subadd/constructions.hpp"
#include "subadd/errors.hpp"
#include "subadd/harness.hpp"
#include "subadd/io.hpp"
#include "subadd/products.hpp"
#include "subadd/reductions.hpp"
#include "subadd/solvers.hpp"

using namespace subadd;

namespace {

enum Exit { kPass = 0, kViolation = 1, kInputError = 2, kExcessiveSkips = 3 };

struct Globals {
  std::uint64_t seed = 0;
  int trials = 100;
  std::optional<int> cap;
  std::string out;
  std::string format = "json";

  SolverCaps caps() const {
    SolverCaps c;
    if (cap) c.alpha = c.chi = c.im = c.sim_sigma = c.sim = c.dim = c.mes = *cap;
    return c;
  }
};

void emit(const Globals& g, const Json& doc) {
  if (g.out.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    save_json(g.out, doc);
  }
}

std::vector<int> read_int_list(const Json& doc, const std::string& what) {
  if (!doc.is_array()) throw ParseError("$", what + " must be an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    out.push_back(static_cast<int>(json_detail::as_integer(doc[i], "$[" + std::to_string(i) + "]")));
  }
  return out;
}

// A coloring file is a plain array of colors, or {"value":…, "certificate":[…]}
// as written by `solve chi`.
std::vector<int> read_coloring(const Json& doc) {
  if (doc.is_object()) return read_int_list(json_detail::field(doc, "certificate", "$"), "coloring");
  return read_int_list(doc, "coloring");
}

std::vector<int> coloring_or_optimal(const std::string& path, const Graph& g, const SolverCaps& caps) {
  if (!path.empty()) return read_coloring(load_json(path));
  return chi(g, caps).color;
}

Json checked_json(const CheckedRealizer& r) {
  return {{"realizer", write_realizer(r.realizer)}, {"relaxed", r.relaxed}};
}

Json mes_graph_json(const MesGraph& mg) {
  return {{"type", "mes-graph"}, {"graph", write_bipartite(mg.graph)}, {"sigma", write_order(mg.sigma)}};
}

Json semi_json(const SemiInducedCertificate& c) {
  return {{"sigma", write_order(c.sigma)}, {"matching", write_matching(c.matching)}};
}

std::string doc_type(const Json& doc) {
  if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string()) {
    throw ParseError("$.type", "missing document type");
  }
  return doc["type"].get<std::string>();
}

// Graph problems also accept a poset, read as its comparability graph.
Graph read_graph_like(const Json& doc) {
  if (doc_type(doc) == "poset") return undirected_view(read_poset(doc));
  return read_graph(doc);
}

int run_solve(const Globals& gl, const std::string& problem, const std::string& input, const std::string& order) {
  Json doc = load_json(input);
  const SolverCaps caps = gl.caps();
  Json out;
  if (problem == "alpha") {
    auto r = alpha(read_graph_like(doc), caps);
    out = {{"value", r.value}, {"certificate", write_vertex_list(r.vertices)}};
  } else if (problem == "chi") {
    auto r = chi(read_graph_like(doc), caps);
    out = {{"value", r.value}, {"certificate", write_vertex_list(r.color)}};
  } else if (problem == "im") {
    auto r = im(read_graph_like(doc), caps);
    out = {{"value", r.value}, {"certificate", write_matching(r.matching)}};
  } else if (problem == "sim") {
    auto r = sim(read_graph_like(doc), caps);
    out = {{"value", r.value},
           {"certificate", {{"matching", write_matching(r.matching)}, {"sigma", write_order(*r.order)}}}};
  } else if (problem == "simsigma") {
    if (order.empty()) throw InvalidInput("simsigma needs --order");
    auto r = sim_sigma(read_graph_like(doc), read_order(load_json(order)), caps);
    out = {{"value", r.value}, {"certificate", write_matching(r.matching)}};
  } else if (problem == "dim") {
    auto r = dim(read_poset(doc), caps);
    out = {{"value", r.value}, {"certificate", write_realizer(r.realizer)}};
  } else if (problem == "mes") {
    auto r = mes_solve(read_mes(doc), caps);
    out = {{"value", r.value}, {"certificate", write_sequence(r.sequence)}};
  } else {
    throw InvalidInput("unknown problem '" + problem + "'");
  }
  emit(gl, out);
  return kPass;
}

int run_construct(const Globals& gl, const std::string& what, const std::vector<std::string>& files,
                  const std::string& coloring_path, bool drop_edge) {
  auto need = [&](std::size_t n) {
    if (files.size() != n) {
      throw InvalidInput("construct " + what + " takes " + std::to_string(n) + " input files");
    }
  };
  auto graph = [&](std::size_t i) { return read_graph(load_json(files[i])); };
  auto poset = [&](std::size_t i) { return read_poset(load_json(files[i])); };
  auto realizer = [&](std::size_t i) { return read_realizer(load_json(files[i])); };
  const SolverCaps caps = gl.caps();
  const DecompositionFault fault = drop_edge ? DecompositionFault::drop_edge : DecompositionFault::none;
  Json out;
  if (what == "decompose-im" || what == "decompose-sim") {
    const bool semi = what == "decompose-sim";
    need(semi ? 5 : 4);
    Graph g = graph(0), h = graph(1), j = graph(2);
    Matching m = read_matching(load_json(files[3]));
    DecompositionWitness w = semi ? decompose_semi_induced(g, h, j, m, read_order(load_json(files[4])), fault)
                                  : decompose_induced_matching(g, h, j, m, fault);
    auto part = [](const DecompositionPart& p) {
      Json j = {{"host", write_graph(p.host)}, {"matching", write_matching(p.matching)}};
      if (p.order) j["sigma"] = write_order(*p.order);
      return j;
    };
    out = {{"type", "decomposition"},
           {"original_size", w.original_size},
           {"first", part(w.first)},
           {"second", part(w.second)}};
  } else if (what == "realizer-lex") {
    need(4);
    Graph g = graph(0), h = graph(1);
    LexRealizer r = build_realizer_lex(g, h, realizer(2), realizer(3), coloring_or_optimal(coloring_path, g, caps));
    out = {{"realizer", write_realizer(r.realizer)},
           {"layout", {{"d_g", r.layout.d_g}, {"k", r.layout.k}, {"d_h", r.layout.d_h}}}};
  } else if (what == "extend-b") {
    need(2);
    Graph g = graph(0);
    out = write_realizer(extend_Be_realizer_to_B(g, realizer(1), coloring_or_optimal(coloring_path, g, caps)));
  } else if (what == "decompose-poset") {
    need(2);
    PosetDecomposition d = poset_decompose(graph(0), poset(1));
    out = {{"type", "poset-decomposition"},
           {"side", write_vertex_list(d.side)},
           {"kuv_part", write_poset(d.kuv_part)},
           {"complete_part", write_poset(d.complete_part)}};
  } else if (what == "concat") {
    need(4);
    ConcatResult r = concat_realizers(poset(0), realizer(1), poset(2), realizer(3));
    out = {{"intersection", write_poset(r.intersection)}, {"result", checked_json(r.result)}};
  } else if (what == "hitmap") {
    need(2);
    Graph g = graph(0);
    std::vector<int> x = read_int_list(load_json(files[1]), "vertex set");
    out = write_vector(hit_map(g, x));
  } else {
    throw InvalidInput("unknown construction '" + what + "'");
  }
  emit(gl, out);
  return kPass;
}

int run_reduce(const Globals& gl, const std::string& kind, const std::string& input, const std::string& beta,
               const std::string& order) {
  Json doc = load_json(input);
  Json out;
  if (kind == "mrfs") {
    out = write_mrfs(mrfs_build(read_bipartite(doc), parse_rational(beta)));
  } else if (kind == "udpmin" || kind == "smp") {
    const Json& g = json_detail::field(doc, "G", "$");
    const Json& h = json_detail::field(doc, "H", "$");
    out = write_pricing(pricing_build(read_graph(g), read_graph(h)), parse_pricing_model(kind));
  } else if (kind == "dcl") {
    out = write_dcl(dcl_build(read_bipartite(doc)));
  } else if (kind == "mes") {
    if (doc_type(doc) == "mes") {
      out = mes_graph_json(mes_to_sim(read_mes(doc)));
    } else {
      if (order.empty()) throw InvalidInput("reducing a bipartite graph to mes needs --order");
      out = write_mes(sim_to_mes(read_bipartite(doc), read_order(load_json(order))));
    }
  } else {
    throw InvalidInput("unknown reduction '" + kind + "'");
  }
  emit(gl, out);
  return kPass;
}

int run_eval(const Globals& gl, const std::string& instance, const std::string& solution, const std::string& beta) {
  Json doc = load_json(instance);
  Json sol = load_json(solution);
  const std::string type = doc_type(doc);
  Json out;
  if (type == "mrfs") {
    MrfsInstance inst = read_mrfs(doc);
    Rational b = beta.empty() ? inst.beta : parse_rational(beta);
    std::vector<Rational> x = read_vector(sol);
    out = {{"satisfied", mrfs_eval(inst, x, b)}, {"beta", format_rational(b)}};
  } else if (type == "udpmin" || type == "smp") {
    PricingInstance inst = read_pricing(doc);
    out = {{"revenue", format_rational(pricing_revenue(inst, read_prices(sol), parse_pricing_model(type)))}};
  } else if (type == "dcl") {
    DclInstance inst = read_dcl(doc);
    DclSolution s = read_dcl_solution(sol, inst);
    auto err = dcl_check(inst, s);
    out = {{"valid", !err}, {"satisfied", s.satisfied()}};
    if (err) out["error"] = *err;
    emit(gl, out);
    return err ? kViolation : kPass;
  } else if (type == "mes") {
    MesInstance inst = read_mes(doc);
    std::vector<int> seq = read_sequence(sol);
    auto err = check_expanding_sequence(inst, seq);
    out = {{"valid", !err}, {"length", seq.size()}};
    if (err) out["error"] = *err;
    emit(gl, out);
    return err ? kViolation : kPass;
  } else {
    throw InvalidInput("eval does not handle documents of type '" + type + "'");
  }
  emit(gl, out);
  return kPass;
}

int run_forward(const Globals& gl, const std::string& instance, const std::string& matching) {
  Json doc = load_json(instance);
  Matching m = read_matching(load_json(matching));
  const std::string type = doc_type(doc);
  Json out;
  if (type == "mrfs") {
    out = write_vector(mrfs_from_matching(read_mrfs(doc), m));
  } else if (type == "udpmin" || type == "smp") {
    PricingInstance inst = read_pricing(doc);
    out = write_prices(pricing_from_matching(inst, m).for_model(parse_pricing_model(type)));
  } else if (type == "dcl") {
    out = write_dcl_solution(dcl_forward(read_dcl(doc), m));
  } else {
    throw InvalidInput("forward does not handle documents of type '" + type + "'");
  }
  emit(gl, out);
  return kPass;
}

int run_recover(const Globals& gl, const std::string& instance, const std::string& solution,
                const std::string& beta) {
  Json doc = load_json(instance);
  Json sol = load_json(solution);
  const std::string type = doc_type(doc);
  Json out;
  if (type == "mrfs") {
    MrfsInstance inst = read_mrfs(doc);
    out = semi_json(mrfs_recover(inst, read_vector(sol), beta.empty() ? inst.beta : parse_rational(beta)));
  } else if (type == "udpmin" || type == "smp") {
    PricingInstance inst = read_pricing(doc);
    PricingRecovery r = pricing_recover(inst, read_prices(sol), parse_pricing_model(type));
    out = semi_json(r.certificate);
    out["tight"] = r.tight;
    out["canonical_tight"] = r.canonical_tight;
  } else if (type == "dcl") {
    DclInstance inst = read_dcl(doc);
    out = semi_json(dcl_backward(inst, read_dcl_solution(sol, inst)));
  } else {
    throw InvalidInput("recover does not handle documents of type '" + type + "'");
  }
  emit(gl, out);
  return kPass;
}

struct VerifyArgs {
  std::string id;
  int max_factor = 4;
  int max_third = 3;
  std::optional<int> trial;
  std::string replay;
  bool drop_edge = false;
};

int run_verify(const Globals& gl, const VerifyArgs& va) {
  const Inequality id = parse_inequality(va.id);
  const DecompositionFault fault = va.drop_edge ? DecompositionFault::drop_edge : DecompositionFault::none;
  if (!va.replay.empty()) {
    // Re-run recorded inputs, by default those of the first failing trial.
    Json report = load_json(va.replay);
    const Json& records = json_detail::field(report, "records", "$");
    const Json* chosen = nullptr;
    for (const Json& r : records) {
      const bool match = va.trial ? r.value("index", -1) == *va.trial : r.value("verdict", "") == "FAIL";
      if (match) {
        chosen = &r;
        break;
      }
    }
    if (!chosen) throw InvalidInput("no matching trial record in " + va.replay);
    CheckOutcome o = run_check(id, json_detail::field(*chosen, "inputs", "$.records[]"), gl.caps(), fault);
    emit(gl, {{"type", "replay"},
              {"inequality", to_string(id)},
              {"index", (*chosen)["index"]},
              {"verdict", to_string(o.verdict)},
              {"lhs", o.lhs},
              {"rhs", o.rhs},
              {"certificates", o.certificates},
              {"note", o.note}});
    return o.verdict == Verdict::fail ? kViolation : kPass;
  }
  TrialConfig cfg;
  cfg.id = id;
  cfg.trials = gl.trials;
  cfg.seed = gl.seed;
  cfg.max_factor = va.max_factor;
  cfg.max_third = va.max_third;
  cfg.caps = gl.caps();
  cfg.fault = fault;
  cfg.only_trial = va.trial;
  TrialReport report = verify_subadditivity(cfg);
  emit(gl, report.to_json());
  std::cerr << to_string(id) << ": " << to_string(report.verdict()) << " (" << report.passes << " pass, "
            << report.fails << " fail, " << report.skips << " skip)\n";
  if (report.verdict() == Verdict::fail) return kViolation;
  if (report.excessive_skips()) return kExcessiveSkips;
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers, product constructions and verification campaigns for sub-additivity bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--seed", gl.seed, "Master seed for campaigns");
  app.add_option("--trials", gl.trials, "Number of campaign trials")->check(CLI::NonNegativeNumber);
  app.add_option("--cap", gl.cap, "Vertex cap applied to every exact solver")->check(CLI::PositiveNumber);
  app.add_option("--out", gl.out, "Write the result here instead of stdout");
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"json"}));

  int status = kPass;
  std::function<int()> action;

  // product / bip / kfold
  std::string kind, in1, in2;
  int k = 1;
  bool extended = false;
  auto* cmd_product = app.add_subcommand("product", "Product of two graphs (extended-tensor takes a poset)");
  cmd_product->add_option("kind", kind, "tensor | extended-tensor | disjunctive | lexicographic")->required();
  cmd_product->add_option("G", in1)->required();
  cmd_product->add_option("H", in2, "Second graph, or poset for extended-tensor")->required();
  cmd_product->callback([&] {
    action = [&] {
      ProductKind pk = parse_product_kind(kind);
      Graph g = read_graph(load_json(in1));
      if (pk == ProductKind::extended_tensor) {
        emit(gl, write_poset(extended_tensor_poset(g, read_poset(load_json(in2)))));
      } else {
        emit(gl, write_graph(product(pk, g, read_graph(load_json(in2)))));
      }
      return kPass;
    };
  });

  auto* cmd_bip = app.add_subcommand("bip", "Bipartite adjacency poset of a graph");
  cmd_bip->add_option("G", in1)->required();
  cmd_bip->add_flag("--extended", extended, "Include the diagonal pairs (u,0) < (u,1)");
  cmd_bip->callback([&] {
    action = [&] {
      Graph g = read_graph(load_json(in1));
      emit(gl, write_poset(extended ? bip_e(g) : bip(g)));
      return kPass;
    };
  });

  std::uint64_t fold_cap = kDefaultFoldCap;
  auto* cmd_kfold = app.add_subcommand("kfold", "k-fold power of a graph");
  cmd_kfold->add_option("kind", kind, "tensor | disjunctive | lexicographic")->required();
  cmd_kfold->add_option("G", in1)->required();
  cmd_kfold->add_option("k", k)->required()->check(CLI::PositiveNumber);
  cmd_kfold->add_option("--fold-cap", fold_cap, "Largest allowed vertex count of the power");
  cmd_kfold->callback([&] {
    action = [&] {
      emit(gl, write_graph(k_fold(parse_product_kind(kind), read_graph(load_json(in1)), k, fold_cap)));
      return kPass;
    };
  });

  // solve
  std::string problem, order;
  auto* cmd_solve = app.add_subcommand("solve", "Exact value with a certificate");
  cmd_solve->add_option("problem", problem)
      ->required()
      ->check(CLI::IsMember({"alpha", "chi", "im", "sim", "simsigma", "dim", "mes"}));
  cmd_solve->add_option("input", in1)->required();
  cmd_solve->add_option("--order", order, "Total order for simsigma");
  cmd_solve->callback([&] { action = [&] { return run_solve(gl, problem, in1, order); }; });

  // construct
  std::string what, coloring;
  std::vector<std::string> files;
  bool drop_edge = false;
  auto* cmd_construct = app.add_subcommand("construct", "Run one of the constructive certificates");
  cmd_construct->add_option("what", what)
      ->required()
      ->check(CLI::IsMember(
          {"decompose-im", "decompose-sim", "realizer-lex", "extend-b", "decompose-poset", "concat", "hitmap"}));
  cmd_construct->add_option("inputs", files, "Input documents in the order the construction expects")->required();
  cmd_construct->add_option("--coloring", coloring, "Proper coloring of G; an optimal one is computed if absent");
  cmd_construct->add_flag("--drop-edge", drop_edge, "Test hook: corrupt the decomposition by dropping an edge");
  cmd_construct->callback([&] { action = [&] { return run_construct(gl, what, files, coloring, drop_edge); }; });

  // reduce / eval / forward / recover
  std::string beta = "1";
  auto* cmd_reduce = app.add_subcommand("reduce", "Build a reduction instance");
  cmd_reduce->add_option("kind", kind)->required()->check(CLI::IsMember({"mrfs", "udpmin", "smp", "dcl", "mes"}));
  cmd_reduce->add_option("input", in1, "Bipartite graph, {\"G\",\"H\"} pair, or set system")->required();
  cmd_reduce->add_option("--beta", beta, "Gap parameter for mrfs");
  cmd_reduce->add_option("--order", order, "Order of the bipartite graph when reducing to mes");
  cmd_reduce->callback([&] { action = [&] { return run_reduce(gl, kind, in1, beta, order); }; });

  std::string eval_beta;
  auto* cmd_eval = app.add_subcommand("eval", "Objective value of a solution");
  cmd_eval->add_option("instance", in1)->required();
  cmd_eval->add_option("solution", in2)->required();
  cmd_eval->add_option("--beta", eval_beta, "Override the instance's gap parameter");
  cmd_eval->callback([&] { action = [&] { return run_eval(gl, in1, in2, eval_beta); }; });

  auto* cmd_forward = app.add_subcommand("forward", "Solution built from a matching");
  cmd_forward->add_option("instance", in1)->required();
  cmd_forward->add_option("matching", in2)->required();
  cmd_forward->callback([&] { action = [&] { return run_forward(gl, in1, in2); }; });

  auto* cmd_recover = app.add_subcommand("recover", "Semi-induced matching recovered from a solution");
  cmd_recover->add_option("instance", in1)->required();
  cmd_recover->add_option("solution", in2)->required();
  cmd_recover->add_option("--beta", eval_beta, "Override the instance's gap parameter");
  cmd_recover->callback([&] { action = [&] { return run_recover(gl, in1, in2, eval_beta); }; });

  // verify
  VerifyArgs va;
  auto* cmd_verify = app.add_subcommand("verify", "Randomized campaign for one inequality");
  std::vector<std::string> ids;
  for (Inequality i : all_inequalities()) ids.emplace_back(to_string(i));
  cmd_verify->add_option("id", va.id)->required()->check(CLI::IsMember(ids));
  cmd_verify->add_option("--max-factor", va.max_factor, "Vertex cap of G and H")->check(CLI::PositiveNumber);
  cmd_verify->add_option("--max-third", va.max_third, "Vertex cap of J, or element cap of P")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--trial", va.trial, "Run only this trial index")->check(CLI::NonNegativeNumber);
  cmd_verify->add_option("--replay", va.replay, "Re-run the recorded inputs of a report");
  cmd_verify->add_flag("--drop-edge", va.drop_edge, "Test hook: corrupt im/sim decompositions");
  cmd_verify->callback([&] { action = [&] { return run_verify(gl, va); }; });

  // amplify
  std::string mode = "matching";
  std::uint64_t amp_cap = 64;
  auto* cmd_amplify = app.add_subcommand("amplify", "Table of k-fold powers");
  cmd_amplify->add_option("G", in1)->required();
  cmd_amplify->add_option("k", k)->required()->check(CLI::PositiveNumber);
  cmd_amplify->add_option("--mode", mode)->check(CLI::IsMember({"matching", "dimension"}));
  cmd_amplify->add_option("--fold-cap", amp_cap, "Largest allowed vertex count of a power");
  cmd_amplify->callback([&] {
    action = [&] {
      AmplifyReport r = amplify_report(read_graph(load_json(in1)), k, parse_amplify_mode(mode), gl.caps(), amp_cap);
      emit(gl, r.to_json());
      return r.ok ? kPass : kViolation;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }
  try {
    status = action();
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed document: " << e.what() << '\n';
    return kInputError;
  }
  return status;
}
