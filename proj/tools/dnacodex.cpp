// Command line front end: code search, verification, conflict graphs,
// exact cliques, and the bounds-table harness.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "dnacodex/clique.hpp"
#include "dnacodex/conflict_graph.hpp"
#include "dnacodex/serialize.hpp"
#include "dnacodex/sls.hpp"
#include "table_harness.hpp"

using namespace dnacodex;

namespace {

// 0 ok, 1 invalid code, 2 bad arguments, 3 I/O or parse failure,
// 4 computational abort or regression.
int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::InvalidParams:
    case Errc::TooLarge:
    case Errc::IndexOutOfRange:
      return 2;
    case Errc::InvalidSymbol:
    case Errc::EmptyInput:
    case Errc::LengthMismatch:
    case Errc::ParseError:
    case Errc::MissingHeader:
      return 3;
    case Errc::Exhausted:
      return 4;
  }
  return 2;
}

struct Budgets {
  std::uint64_t clique_nodes = 1'000'000'000;
  std::uint64_t vertices = kDefaultVertexBudget;
  double seconds = 0.0;
};

// DNACODEX_BUDGET: either a bare node count or "nodes=N,vertices=V,seconds=S".
Budgets budgets_from_env() {
  Budgets budgets;
  const char* env = std::getenv("DNACODEX_BUDGET");
  if (env == nullptr || *env == '\0') return budgets;
  const std::string text(env);
  if (text.find('=') == std::string::npos) {
    budgets.clique_nodes = std::strtoull(text.c_str(), nullptr, 10);
    return budgets;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq != std::string::npos) {
      const std::string key = item.substr(0, eq);
      const std::string value = item.substr(eq + 1);
      if (key == "nodes")
        budgets.clique_nodes = std::strtoull(value.c_str(), nullptr, 10);
      else if (key == "vertices")
        budgets.vertices = std::strtoull(value.c_str(), nullptr, 10);
      else if (key == "seconds")
        budgets.seconds = std::strtod(value.c_str(), nullptr);
    }
    pos = comma + 1;
  }
  return budgets;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) raise(Errc::ParseError, "cannot open '" + path + "' for writing");
  out << text;
  if (!out.good()) raise(Errc::ParseError, "write to '" + path + "' failed");
}

GraphKind parse_kind(const std::string& kind) {
  if (kind == "gcrc") return GraphKind::GcRc;
  if (kind == "gc") return GraphKind::GcOnly;
  raise(Errc::InvalidParams, "kind must be gcrc or gc");
}

struct SearchArgs {
  int n = 0, d = 0, w = 0;
  std::optional<std::uint64_t> target;
  std::uint64_t max_stagnation = 1'000'000;
  double alpha = 6.5e-5;
  double beta = 1.45;
  std::uint64_t seed = 0;
  unsigned runs = 1;
  std::string out;
  std::string json_path;
};

int cmd_search(const SearchArgs& args) {
  SlsParams params{CodeParams(args.n, args.d, args.w), args.target};
  params.max_stagnation = args.max_stagnation;
  params.alpha = args.alpha;
  params.beta = args.beta;
  params.seed = args.seed;
  const SlsOutcome outcome = run_multi(params, args.runs);
  const std::string record = run_record_json(params, outcome);
  if (!args.out.empty()) write_text_file(args.out, code_file_string(outcome.code));
  if (!args.json_path.empty()) write_text_file(args.json_path, record + "\n");
  std::cout << record << "\n";
  return 0;
}

struct VerifyArgs {
  std::string file;
  int n = 0, d = 0, w = 0;
  std::string mode = "strong";
  bool json = false;
};

int cmd_verify(const VerifyArgs& args) {
  std::ifstream in(args.file);
  if (!in) raise(Errc::ParseError, "cannot open '" + args.file + "'");
  const CodeSet code = read_code_file(in, CodeParams(args.n, args.d, args.w));
  const VerifyReport report =
      args.mode == "strong" ? verify_strong(code) : verify_weak(code);
  if (args.json) {
    std::cout << verify_report_json(report, args.mode) << "\n";
  } else if (report.valid) {
    std::cout << "valid " << args.mode << " (" << args.n << "," << args.d << ","
              << args.w << ")-code with " << code.size() << " sequences\n";
  } else {
    std::cout << "invalid: " << report.violations.size() << " violation(s)\n";
    for (const Violation& v : report.violations) {
      std::cout << "  " << to_string(v.kind) << " " << v.first.str();
      if (v.second) std::cout << " " << v.second->str();
      std::cout << " value=" << v.value << "\n";
    }
  }
  return report.valid ? 0 : 1;
}

struct GraphArgs {
  std::string kind;
  int n = 0, d = 0, w = 0;
  std::string dimacs;
  bool stats = false;
};

int cmd_graph(const GraphArgs& args, const Budgets& budgets) {
  const GraphKind kind = parse_kind(args.kind);
  const CodeParams params(args.n, args.d, args.w);
  const ConflictGraph graph = build_conflict_graph(kind, params, budgets.vertices);
  if (!args.dimacs.empty()) {
    std::ofstream out(args.dimacs);
    if (!out) raise(Errc::ParseError, "cannot open '" + args.dimacs + "' for writing");
    write_dimacs(graph, out);
    if (!out.good()) raise(Errc::ParseError, "write to '" + args.dimacs + "' failed");
  }
  std::cout << graph_stats_json(kind, params, graph_stats(graph)) << "\n";
  return 0;
}

struct CliqueArgs {
  std::string kind;
  int n = 0, d = 0, w = 0;
  bool count = false;
  std::string out;
};

int cmd_clique(const CliqueArgs& args, const Budgets& budgets) {
  const GraphKind kind = parse_kind(args.kind);
  const CodeParams params(args.n, args.d, args.w);
  const ConflictGraph graph = build_conflict_graph(kind, params, budgets.vertices);
  const CliqueBudget budget{budgets.clique_nodes, budgets.seconds};
  const CliqueResult result = max_clique(graph, budget);

  std::optional<CountResult> counted;
  if (args.count && !result.aborted)
    counted = count_max_cliques(graph.adj, result.size, budget);

  std::cout << clique_result_json(kind, params, result, counted) << "\n";
  if (!args.out.empty() && !result.aborted)
    write_text_file(args.out, code_file_string(clique_to_code(graph, result)));

  if (result.aborted || (counted && !counted->exhausted)) {
    std::cerr << "error: search budget exhausted; reported values are partial\n";
    return 4;
  }
  return 0;
}

struct TableArgs {
  int max_n = 0;
  std::string mode = "both";
  std::string budget = "desk";
  std::uint64_t seed = 0;
  bool json = false;
};

int cmd_table(const TableArgs& args, const Budgets& budgets) {
  using namespace dnacodex::tool;
  const TableMode mode = args.mode == "exact"  ? TableMode::Exact
                         : args.mode == "sls" ? TableMode::Sls
                                              : TableMode::Both;
  TableBudget budget = table_budget(args.budget);
  if (std::getenv("DNACODEX_BUDGET") != nullptr) {
    budget.clique_nodes = budgets.clique_nodes;
    budget.vertex_budget = budgets.vertices;
  }
  const TableReport report = compute_table(args.max_n, mode, budget, args.seed);
  if (args.json)
    std::cout << table_json(args.max_n, mode, budget, report) << "\n";
  else
    std::cout << table_markdown(report);
  if (!report.conflicts.empty()) {
    for (const std::string& conflict : report.conflicts)
      std::cerr << "regression: " << conflict << "\n";
    return 4;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constant GC-content DNA code designer"};
  app.require_subcommand(1);

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand("search", "stochastic local search for a code");
  search->add_option("--n", search_args.n, "sequence length")->required();
  search->add_option("--d", search_args.d, "minimum distance")->required();
  search->add_option("--w", search_args.w, "GC weight")->required();
  std::uint64_t target_value = 0;
  CLI::Option* target_opt =
      search->add_option("--target", target_value, "stop at this code size");
  search->add_option("--max-stagnation", search_args.max_stagnation,
                     "non-improving moves before stopping");
  search->add_option("--alpha", search_args.alpha, "acceptance scale");
  search->add_option("--beta", search_args.beta, "acceptance decay");
  search->add_option("--seed", search_args.seed, "base random seed");
  search->add_option("--runs", search_args.runs, "independent restarts")
      ->check(CLI::PositiveNumber);
  search->add_option("--out", search_args.out, "write the best code here");
  search->add_option("--json", search_args.json_path, "also write the run record here");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "check a code file");
  verify->add_option("--file", verify_args.file, "code file")->required();
  verify->add_option("--n", verify_args.n, "sequence length")->required();
  verify->add_option("--d", verify_args.d, "minimum distance")->required();
  verify->add_option("--w", verify_args.w, "GC weight")->required();
  verify->add_option("--mode", verify_args.mode, "strong or weak")
      ->check(CLI::IsMember({"strong", "weak"}));
  verify->add_flag("--json", verify_args.json, "machine-readable report");

  GraphArgs graph_args;
  CLI::App* graph = app.add_subcommand("graph", "build a conflict graph");
  graph->add_option("--kind", graph_args.kind, "gcrc or gc")
      ->required()
      ->check(CLI::IsMember({"gcrc", "gc"}));
  graph->add_option("--n", graph_args.n, "sequence length")->required();
  graph->add_option("--d", graph_args.d, "minimum distance")->required();
  graph->add_option("--w", graph_args.w, "GC weight")->required();
  graph->add_option("--dimacs", graph_args.dimacs, "write DIMACS here");
  graph->add_flag("--stats", graph_args.stats, "print statistics (always on)");

  CliqueArgs clique_args;
  CLI::App* clique = app.add_subcommand("clique", "exact maximum clique / optimal code");
  clique->add_option("--kind", clique_args.kind, "gcrc or gc")
      ->required()
      ->check(CLI::IsMember({"gcrc", "gc"}));
  clique->add_option("--n", clique_args.n, "sequence length")->required();
  clique->add_option("--d", clique_args.d, "minimum distance")->required();
  clique->add_option("--w", clique_args.w, "GC weight")->required();
  clique->add_flag("--count", clique_args.count, "also count distinct maximum cliques");
  clique->add_option("--out", clique_args.out, "write the witness code here");

  TableArgs table_args;
  CLI::App* table = app.add_subcommand("table", "reproduce the bounds table");
  table->add_option("--max-n", table_args.max_n, "largest length, 4..14")->required();
  table->add_option("--mode", table_args.mode, "exact, sls or both")
      ->check(CLI::IsMember({"exact", "sls", "both"}));
  table->add_option("--budget", table_args.budget, "tiny, desk or full")
      ->check(CLI::IsMember({"tiny", "desk", "full"}));
  table->add_option("--seed", table_args.seed, "base seed for search cells");
  table->add_flag("--json", table_args.json, "machine-readable table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Budgets budgets = budgets_from_env();
  try {
    if (app.got_subcommand(search)) {
      if (target_opt->count() > 0) search_args.target = target_value;
      return cmd_search(search_args);
    }
    if (app.got_subcommand(verify)) return cmd_verify(verify_args);
    if (app.got_subcommand(graph)) return cmd_graph(graph_args, budgets);
    if (app.got_subcommand(clique)) return cmd_clique(clique_args, budgets);
    if (app.got_subcommand(table)) return cmd_table(table_args, budgets);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
