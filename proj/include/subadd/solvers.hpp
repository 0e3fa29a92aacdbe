#pragma once

#include <optional>
#include <span>
#include <vector>

#include "subadd/graph.hpp"

namespace subadd {

// Vertex-count limits. Exceeding one raises CapExceeded; nothing is truncated.
struct SolverCaps {
  int alpha = 64;
  int chi = 32;
  int im = 64;
  int sim_sigma = 64;
  int sim = 64;
  int dim = 48;
  int mes = 64;  // number of sets; the ground set is limited to 64 elements
};

struct VertexSetResult {
  int value = 0;
  std::vector<int> vertices;  // sorted
};

struct ColoringResult {
  int value = 0;
  std::vector<int> color;  // colors 0..value-1
};

struct MatchingResult {
  int value = 0;
  Matching matching;
  std::optional<TotalOrder> order;  // witnessing order for sim
};

struct DimResult {
  int value = 0;
  Realizer realizer;  // coordinate j is the rank in the j-th linear extension
};

struct MesInstance {
  int ground = 0;
  std::vector<std::vector<int>> sets;  // elements 0..ground-1, each set sorted
  friend bool operator==(const MesInstance&, const MesInstance&) = default;
};

struct SequenceResult {
  int value = 0;
  std::vector<int> sequence;  // strictly increasing set indices
};

VertexSetResult alpha(const Graph& g, const SolverCaps& caps = {});
ColoringResult chi(const Graph& g, const SolverCaps& caps = {});
// Colors vertices in the given order (default: by index) with the smallest
// available color.
std::vector<int> greedy_coloring(const Graph& g, std::span<const int> order = {});
MatchingResult im(const Graph& g, const SolverCaps& caps = {});
MatchingResult sim_sigma(const Graph& g, const TotalOrder& sigma, const SolverCaps& caps = {});
MatchingResult sim(const Graph& g, const SolverCaps& caps = {});
DimResult dim(const Poset& p, const SolverCaps& caps = {});
SequenceResult mes_solve(const MesInstance& inst, const SolverCaps& caps = {});

// Throws InvalidInput when elements are out of range.
void validate_mes(const MesInstance& inst);
std::optional<std::string> check_expanding_sequence(const MesInstance& inst,
                                                    std::span<const int> sequence);

// Any order under which m is semi-induced: first endpoints of the designated
// edges in sequence, then their partners, then everything else. Edges must be
// given in sequence order with the designated endpoint first.
TotalOrder order_for_sequence(int n, std::span<const Edge> designated);

}  // namespace subadd
