#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dnacodex/clique.hpp"
#include "dnacodex/codeset.hpp"
#include "dnacodex/conflict_graph.hpp"
#include "dnacodex/sls.hpp"

namespace dnacodex {

// JSON records with a fixed key order, so equal inputs give byte-identical
// output. The only run-dependent field is "elapsed_ms" in clique results;
// consumers that diff records should drop it first.

std::string run_record_json(const SlsParams& params, const SlsOutcome& outcome);

std::string graph_stats_json(GraphKind kind, const CodeParams& params,
                             const GraphStats& stats);

std::string clique_result_json(GraphKind kind, const CodeParams& params,
                               const CliqueResult& result,
                               const std::optional<CountResult>& count = std::nullopt);

std::string verify_report_json(const VerifyReport& report, std::string_view mode);

}  // namespace dnacodex
