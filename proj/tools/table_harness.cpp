#include "table_harness.hpp"

#include <json.hpp>
#include <sstream>

#include "dnacodex/conflict_graph.hpp"
#include "dnacodex/serialize.hpp"

namespace dnacodex::tool {

using ordered_json = nlohmann::ordered_json;

TableBudget table_budget(const std::string& name) {
  if (name == "tiny") return {"tiny", 100'000, 2'000, 2'000, 1};
  if (name == "desk") return {"desk", 10'000'000, 50'000, 100'000, 4};
  if (name == "full") return {"full", 10'000'000'000ULL, 200'000, 1'000'000, 8};
  raise(Errc::InvalidParams, "unknown budget '" + name + "' (tiny|desk|full)");
}

namespace {

const char* source_name(EntrySource source) {
  switch (source) {
    case EntrySource::Clique: return "clique";
    case EntrySource::Sls: return "sls";
    case EntrySource::Recorded: return "recorded";
  }
  return "?";
}

void cross_check(const TableEntry& entry, const RecordedBound& recorded,
                 std::vector<std::string>& conflicts) {
  std::ostringstream msg;
  msg << "(" << entry.n << "," << entry.d << ")";
  if (entry.source == EntrySource::Clique) {
    if (recorded.status == BoundStatus::Exact && entry.value != recorded.value) {
      msg << " computed exact " << entry.value << " contradicts recorded exact "
          << recorded.value;
      conflicts.push_back(msg.str());
    } else if (recorded.status == BoundStatus::LowerBound &&
               entry.value < recorded.value) {
      msg << " computed exact " << entry.value << " is below recorded lower bound "
          << recorded.value;
      conflicts.push_back(msg.str());
    }
  } else if (entry.source == EntrySource::Sls) {
    if (recorded.status == BoundStatus::Exact && entry.value > recorded.value) {
      msg << " search bound " << entry.value << " exceeds recorded exact "
          << recorded.value;
      conflicts.push_back(msg.str());
    }
  }
}

std::optional<TableEntry> try_clique(int n, int d, int w, const TableBudget& budget) {
  if (constant_gc_count(n, w) > budget.vertex_budget) return std::nullopt;
  const ConflictGraph graph =
      build_conflict_graph(GraphKind::GcRc, CodeParams(n, d, w), budget.vertex_budget);
  const CliqueResult result = max_clique(graph, CliqueBudget{budget.clique_nodes, 0.0});
  if (result.aborted) return std::nullopt;
  TableEntry entry;
  entry.n = n;
  entry.d = d;
  entry.w = w;
  entry.value = result.size;
  entry.status = BoundStatus::Exact;
  entry.source = EntrySource::Clique;
  for (const Sequence& s : result.sequences) entry.witness.push_back(s.str());
  return entry;
}

TableEntry run_sls(int n, int d, int w, const TableBudget& budget, std::uint64_t seed,
                   const std::optional<RecordedBound>& recorded) {
  SlsParams params{CodeParams(n, d, w)};
  // A recorded exact value is a hard ceiling, so stop there; otherwise run
  // open-ended to stagnation.
  if (recorded && recorded->status == BoundStatus::Exact)
    params.target = recorded->value;
  params.max_stagnation = budget.sls_stagnation;
  params.seed = seed;
  const SlsOutcome outcome = run_multi(params, budget.sls_runs);
  TableEntry entry;
  entry.n = n;
  entry.d = d;
  entry.w = w;
  entry.value = outcome.code.size();
  entry.status = BoundStatus::LowerBound;
  entry.source = EntrySource::Sls;
  entry.run_params = params;
  entry.run_outcome = outcome;
  return entry;
}

TableEntry recorded_entry(int n, int d, int w, const RecordedBound& recorded) {
  TableEntry entry;
  entry.n = n;
  entry.d = d;
  entry.w = w;
  entry.value = recorded.value;
  entry.status = recorded.status;
  entry.source = EntrySource::Recorded;
  return entry;
}

}  // namespace

TableReport compute_table(int max_n, TableMode mode, const TableBudget& budget,
                          std::uint64_t seed) {
  if (max_n < 4 || max_n > 14)
    raise(Errc::InvalidParams, "max-n must be in [4, 14], got " + std::to_string(max_n));
  TableReport report;
  for (int n = 4; n <= max_n; ++n) {
    for (int d = 3; d <= n; ++d) {
      const int w = n / 2;
      const std::optional<RecordedBound> recorded = recorded_bound(n, d);
      std::optional<TableEntry> entry;

      if (mode == TableMode::Exact || mode == TableMode::Both)
        entry = try_clique(n, d, w, budget);
      if (!entry && mode != TableMode::Exact)
        entry = run_sls(n, d, w, budget, seed, recorded);
      if (!entry) {
        if (!recorded)
          raise(Errc::InvalidParams, "no recorded value to fall back to for (" +
                                         std::to_string(n) + "," + std::to_string(d) + ")");
        entry = recorded_entry(n, d, w, *recorded);
      }
      if (recorded) cross_check(*entry, *recorded, report.conflicts);
      report.entries.push_back(std::move(*entry));
    }
  }
  return report;
}

std::string table_markdown(const TableReport& report) {
  std::ostringstream out;
  out << "| n | d | w | value | status | source |\n";
  out << "|---|---|---|-------|--------|--------|\n";
  for (const TableEntry& e : report.entries)
    out << "| " << e.n << " | " << e.d << " | " << e.w << " | " << e.value << " | "
        << to_string(e.status) << " | " << source_name(e.source) << " |\n";
  for (const std::string& conflict : report.conflicts)
    out << "\nREGRESSION: " << conflict << "\n";
  return out.str();
}

std::string table_json(int max_n, TableMode mode, const TableBudget& budget,
                       const TableReport& report) {
  ordered_json j;
  j["max_n"] = max_n;
  j["mode"] = mode == TableMode::Exact ? "exact" : mode == TableMode::Sls ? "sls" : "both";
  j["budget"] = budget.name;
  ordered_json entries = ordered_json::array();
  for (const TableEntry& e : report.entries) {
    ordered_json item;
    item["n"] = e.n;
    item["d"] = e.d;
    item["w"] = e.w;
    item["value"] = e.value;
    item["status"] = to_string(e.status);
    item["source"] = source_name(e.source);
    if (!e.witness.empty()) item["witness"] = e.witness;
    if (e.run_params && e.run_outcome)
      item["run"] = ordered_json::parse(run_record_json(*e.run_params, *e.run_outcome));
    entries.push_back(item);
  }
  j["entries"] = entries;
  ordered_json conflicts = ordered_json::array();
  for (const std::string& c : report.conflicts) conflicts.push_back(c);
  j["conflicts"] = conflicts;
  return j.dump();
}

}  // namespace dnacodex::tool
