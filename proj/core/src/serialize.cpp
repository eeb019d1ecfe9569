#include "dnacodex/serialize.hpp"

#include <json.hpp>

namespace dnacodex {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json code_array(const CodeSet& code) {
  ordered_json arr = ordered_json::array();
  for (const Sequence& s : code.members()) arr.push_back(s.str());
  return arr;
}

}  // namespace

std::string run_record_json(const SlsParams& params, const SlsOutcome& outcome) {
  ordered_json j;
  j["n"] = params.code.n;
  j["d"] = params.code.d;
  j["w"] = params.code.w;
  if (params.target)
    j["target"] = *params.target;
  else
    j["target"] = nullptr;
  j["max_stagnation"] = params.max_stagnation;
  j["alpha"] = params.alpha;
  j["beta"] = params.beta;
  j["seed"] = outcome.seed;
  j["size"] = outcome.code.size();
  j["reached_target"] = outcome.reached_target;
  j["total_moves"] = outcome.total_moves;
  j["code"] = code_array(outcome.code);
  return j.dump();
}

std::string graph_stats_json(GraphKind kind, const CodeParams& params,
                             const GraphStats& stats) {
  ordered_json j;
  j["kind"] = to_string(kind);
  j["n"] = params.n;
  j["d"] = params.d;
  j["w"] = params.w;
  j["vertices"] = stats.vertices;
  j["edges"] = stats.edges;
  j["density"] = stats.density;
  return j.dump();
}

std::string clique_result_json(GraphKind kind, const CodeParams& params,
                               const CliqueResult& result,
                               const std::optional<CountResult>& count) {
  ordered_json j;
  j["kind"] = to_string(kind);
  j["n"] = params.n;
  j["d"] = params.d;
  j["w"] = params.w;
  j["size"] = result.size;
  j["aborted"] = result.aborted;
  ordered_json verts = ordered_json::array();
  for (const std::uint32_t v : result.vertices) verts.push_back(v);
  j["vertices"] = verts;
  ordered_json seqs = ordered_json::array();
  for (const Sequence& s : result.sequences) seqs.push_back(s.str());
  j["sequences"] = seqs;
  j["nodes_explored"] = result.nodes_explored;
  j["elapsed_ms"] = result.elapsed_seconds * 1e3;
  if (count) {
    ordered_json c;
    c["max_size"] = count->max_size;
    c["count"] = count->count;
    c["exhausted"] = count->exhausted;
    j["count"] = c;
  }
  return j.dump();
}

std::string verify_report_json(const VerifyReport& report, std::string_view mode) {
  ordered_json j;
  j["mode"] = mode;
  j["valid"] = report.valid;
  ordered_json violations = ordered_json::array();
  for (const Violation& v : report.violations) {
    ordered_json item;
    item["kind"] = to_string(v.kind);
    ordered_json seqs = ordered_json::array();
    seqs.push_back(v.first.str());
    if (v.second) seqs.push_back(v.second->str());
    item["sequences"] = seqs;
    item["value"] = v.value;
    violations.push_back(item);
  }
  j["violations"] = violations;
  return j.dump();
}

}  // namespace dnacodex
