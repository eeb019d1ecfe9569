#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dnacodex/clique.hpp"
#include "dnacodex/reference_data.hpp"
#include "dnacodex/sls.hpp"

namespace dnacodex::tool {

enum class TableMode { Exact, Sls, Both };
enum class EntrySource { Clique, Sls, Recorded };

struct TableEntry {
  int n = 0, d = 0, w = 0;
  std::uint64_t value = 0;
  BoundStatus status = BoundStatus::LowerBound;
  EntrySource source = EntrySource::Recorded;
  std::vector<std::string> witness;      // clique-derived exact entries
  std::optional<SlsParams> run_params;   // search-derived lower bounds
  std::optional<SlsOutcome> run_outcome;
};

struct TableBudget {
  std::string name;
  std::uint64_t clique_nodes;
  std::uint64_t vertex_budget;
  std::uint64_t sls_stagnation;
  unsigned sls_runs;
};

TableBudget table_budget(const std::string& name);  // tiny | desk | full

struct TableReport {
  std::vector<TableEntry> entries;
  std::vector<std::string> conflicts;  // regression findings; empty means clean
};

// One entry per (n, d) with 4 <= n <= max_n, 3 <= d <= n and w = n/2. Exact
// values come from the clique search where it completes within budget; other
// cells fall back to the search heuristic (mode both/sls) or the recorded
// table. Every computed value is cross-checked against the recorded one.
TableReport compute_table(int max_n, TableMode mode, const TableBudget& budget,
                          std::uint64_t seed);

std::string table_markdown(const TableReport& report);
std::string table_json(int max_n, TableMode mode, const TableBudget& budget,
                       const TableReport& report);

}  // namespace dnacodex::tool
