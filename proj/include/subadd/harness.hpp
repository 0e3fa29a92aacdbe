#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "subadd/constructions.hpp"
#include "subadd/graph.hpp"
#include "subadd/io.hpp"
#include "subadd/reductions.hpp"
#include "subadd/solvers.hpp"

namespace subadd {

// ---- randomness ----

// Stable across platforms: splitmix64 mixing of (master, index).
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

// mt19937_64 with bounded draws done here rather than through the
// implementation-defined std distributions, so streams replay everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform on [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound);
  int between(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }
  // True with probability p (0 <= p <= 1).
  bool bernoulli(const Rational& p);
  std::vector<int> permutation(int n);

 private:
  std::mt19937_64 engine_;
};

Graph random_graph(int n, const Rational& p, std::uint64_t seed);
Graph random_graph(int n, const Rational& p, Rng& rng);
// Each element is independently a bottom or top element; bottom -> top pairs
// are related with probability 1/2.
Poset random_height_two_poset(int n, Rng& rng);

// ---- campaigns ----

enum class Inequality {
  im,
  sim,
  dim,
  alpha_mult,
  chi_power,
  elbassioni,
  sim_upper,
  hj_bridge,
  mrfs,
  pricing,
  dcl,
  mes
};

std::string_view to_string(Inequality id);
Inequality parse_inequality(std::string_view name);
const std::vector<Inequality>& all_inequalities();

enum class Verdict { pass, fail, skip };
std::string_view to_string(Verdict v);

struct TrialConfig {
  Inequality id = Inequality::im;
  int trials = 100;
  int max_factor = 4;  // vertices of G and H
  int max_third = 3;   // vertices of J, or elements of P for dim
  std::uint64_t seed = 0;
  SolverCaps caps;
  DecompositionFault fault = DecompositionFault::none;
  std::optional<int> only_trial;  // replay a single trial index
};

// Outcome of checking one instance.
struct CheckOutcome {
  Verdict verdict = Verdict::pass;
  Json lhs;
  Json rhs;
  Json certificates = Json::object();
  std::string note;
};

struct TrialRecord {
  int index = 0;
  std::uint64_t seed = 0;
  Json inputs;
  CheckOutcome outcome;
};

struct TrialReport {
  TrialConfig config;
  std::vector<TrialRecord> records;
  int passes = 0;
  int fails = 0;
  int skips = 0;
  double wall_seconds = 0;

  Verdict verdict() const { return fails > 0 ? Verdict::fail : Verdict::pass; }
  bool excessive_skips() const;  // more than 20% of the trials skipped
  Json to_json() const;
};

TrialReport verify_subadditivity(const TrialConfig& cfg);

// Re-runs the check of one inequality on the "inputs" object of a trial
// record. Campaigns go through the same path, so replays are bit-exact.
CheckOutcome run_check(Inequality id, const Json& inputs, const SolverCaps& caps = {},
                       DecompositionFault fault = DecompositionFault::none);

// Per-instance checks shared by the campaigns and exhaustive tests. Solver
// cap refusals come back as Verdict::skip.
CheckOutcome check_im(const Graph& g, const Graph& h, const Graph& j, const SolverCaps& caps = {},
                      DecompositionFault fault = DecompositionFault::none);
CheckOutcome check_sim(const Graph& g, const Graph& h, const Graph& j, const TotalOrder& sigma,
                       const SolverCaps& caps = {},
                       DecompositionFault fault = DecompositionFault::none);
CheckOutcome check_dim(const Graph& g, const Graph& h, const Poset& p, const SolverCaps& caps = {});
CheckOutcome check_alpha_mult(const Graph& g, const Graph& h, const SolverCaps& caps = {});
CheckOutcome check_chi_power(const Graph& g, int k, const SolverCaps& caps = {});
CheckOutcome check_elbassioni(const Graph& g, const SolverCaps& caps = {});
CheckOutcome check_sim_upper(const Graph& g, const SolverCaps& caps = {});
CheckOutcome check_hj_bridge(const Graph& g, const SolverCaps& caps = {});
CheckOutcome check_mrfs(const Bipartite& g, const Rational& beta, const SolverCaps& caps = {});
CheckOutcome check_pricing(const Graph& g, const Graph& h, const SolverCaps& caps = {});
CheckOutcome check_dcl(const Bipartite& g, const SolverCaps& caps = {});
CheckOutcome check_mes(const MesInstance& inst, const SolverCaps& caps = {});

// ---- amplification ----

enum class AmplifyMode { matching, dimension };
std::string_view to_string(AmplifyMode mode);
AmplifyMode parse_amplify_mode(std::string_view name);

struct AmplifyReport {
  AmplifyMode mode = AmplifyMode::matching;
  std::vector<Json> rows;  // one per k' = 1..k that fit the caps
  std::optional<std::string> truncated;
  bool ok = true;          // every asserted inequality held
  Json to_json() const;
};

AmplifyReport amplify_report(const Graph& g, int k, AmplifyMode mode, const SolverCaps& caps = {},
                             std::uint64_t fold_cap = 64);

}  // namespace subadd
