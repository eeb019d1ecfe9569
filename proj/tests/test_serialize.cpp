#include <doctest.h>

#include <json.hpp>

#include "dnacodex/serialize.hpp"

using namespace dnacodex;
using nlohmann::json;

TEST_CASE("run record json carries the documented fields in order") {
  SlsParams params(CodeParams(4, 3, 2), 6);
  params.max_stagnation = 50000;
  params.seed = 1;
  const SlsOutcome outcome = run(params);
  const std::string text = run_record_json(params, outcome);
  CHECK(text.rfind("{\"n\":4,\"d\":3,\"w\":2,\"target\":6,", 0) == 0);

  const json j = json::parse(text);
  CHECK(j["n"] == 4);
  CHECK(j["target"] == 6);
  CHECK(j["alpha"] == doctest::Approx(6.5e-5));
  CHECK(j["beta"] == doctest::Approx(1.45));
  CHECK(j["seed"] == 1);
  CHECK(j["size"] == 6);
  CHECK(j["reached_target"] == true);
  CHECK(j["code"].size() == 6);
  std::vector<std::string> members = j["code"];
  CHECK(std::is_sorted(members.begin(), members.end()));

  // Byte-identical for equal inputs.
  CHECK(run_record_json(params, run(params)) == text);

  SlsParams open_ended(CodeParams(4, 3, 2));
  open_ended.max_stagnation = 100;
  const std::string open_text = run_record_json(open_ended, run(open_ended));
  CHECK(json::parse(open_text)["target"].is_null());
}

TEST_CASE("graph stats json") {
  const CodeParams p(5, 4, 2);
  const ConflictGraph g = build_conflict_graph(GraphKind::GcRc, p);
  const std::string text = graph_stats_json(GraphKind::GcRc, p, graph_stats(g));
  const json j = json::parse(text);
  CHECK(j["kind"] == "gcrc");
  CHECK(j["n"] == 5);
  CHECK(j["d"] == 4);
  CHECK(j["w"] == 2);
  CHECK(j["vertices"] == 208);
  CHECK(j["edges"] == 6208);
  CHECK(j["density"].get<double>() == doctest::Approx(0.28837).epsilon(2e-5));
}

TEST_CASE("clique result json with and without counts") {
  const CodeParams p(5, 4, 2);
  const ConflictGraph g = build_conflict_graph(GraphKind::GcRc, p);
  const CliqueResult c = max_clique(g);
  const CountResult n = count_max_cliques(g.adj, c.size);

  const json plain = json::parse(clique_result_json(GraphKind::GcRc, p, c));
  CHECK(plain["size"] == 3);
  CHECK(plain["aborted"] == false);
  CHECK(plain["sequences"].size() == 3);
  CHECK(plain["vertices"].size() == 3);
  CHECK_FALSE(plain.contains("count"));
  CHECK(plain.contains("elapsed_ms"));

  const json counted = json::parse(clique_result_json(GraphKind::GcRc, p, c, n));
  CHECK(counted["count"]["count"] == 16384);
  CHECK(counted["count"]["max_size"] == 3);
  CHECK(counted["count"]["exhausted"] == true);

  // Identical modulo the timing field.
  json a = json::parse(clique_result_json(GraphKind::GcRc, p, max_clique(g)));
  json b = json::parse(clique_result_json(GraphKind::GcRc, p, max_clique(g)));
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  CHECK(a == b);
}

TEST_CASE("verify report json lists violations") {
  const CodeSet bad(CodeParams(4, 3, 2), {Sequence::parse("ACGT")});
  const VerifyReport report = verify_strong(bad);
  const json j = json::parse(verify_report_json(report, "strong"));
  CHECK(j["mode"] == "strong");
  CHECK(j["valid"] == false);
  REQUIRE(j["violations"].size() == 1);
  CHECK(j["violations"][0]["kind"] == "SelfComplement");
  CHECK(j["violations"][0]["value"] == 0);
  CHECK(j["violations"][0]["sequences"][0] == "ACGT");

  const json ok = json::parse(verify_report_json(verify_weak(CodeSet(CodeParams(4, 3, 2))), "weak"));
  CHECK(ok["valid"] == true);
  CHECK(ok["violations"].empty());
}
