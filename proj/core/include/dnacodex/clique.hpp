#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dnacodex/conflict_graph.hpp"

namespace dnacodex {

struct CliqueBudget {
  std::uint64_t max_nodes = 1'000'000'000;  // branch nodes
  double max_seconds = 0.0;                 // 0 = no wall-clock cap
};

struct CliqueResult {
  std::size_t size = 0;
  std::vector<std::uint32_t> vertices;  // original indices, ascending
  std::vector<Sequence> sequences;      // filled when searching a ConflictGraph
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
  // Budget hit: size/vertices describe the best clique found so far and are
  // only a lower bound, never silently reported as the maximum.
  bool aborted = false;
};

struct CountResult {
  std::size_t max_size = 0;
  std::uint64_t count = 0;
  bool exhausted = true;  // false when the budget cut the enumeration short
  std::uint64_t nodes_explored = 0;
};

// Exact maximum clique. Vertices are ordered by descending degree, then a
// branch-and-bound over suffix subgraphs runs with the incremental bound
// c(i) = max clique size within {v_i, ..., v_n}; a branch is pruned when the
// current depth plus the bound cannot beat the best clique found. Exact and
// deterministic unless the budget aborts it.
CliqueResult max_clique(const AdjacencyMatrix& adj, const CliqueBudget& budget = {});
CliqueResult max_clique(const ConflictGraph& graph, const CliqueBudget& budget = {});

// Counts distinct maximum cliques (as vertex sets). When known_max is given
// it is cross-checked against a fresh search and InvalidParams is thrown on
// disagreement. An empty graph reports max_size 0, count 0.
CountResult count_max_cliques(const AdjacencyMatrix& adj,
                              std::optional<std::size_t> known_max = std::nullopt,
                              const CliqueBudget& budget = {});

// The clique's sequences as a CodeSet under the graph's parameters. Throws
// IndexOutOfRange if the result does not fit the graph.
CodeSet clique_to_code(const ConflictGraph& graph, const CliqueResult& result);

}  // namespace dnacodex
