#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "dnacodex/conflict_graph.hpp"

using namespace dnacodex;

namespace {

// Direct recomputation of the edge predicate from the distance primitives.
bool expect_edge(GraphKind kind, const CodeParams& p, const Sequence& a,
                 const Sequence& b) {
  if (hamming(a, b) < p.d) return false;
  if (kind == GraphKind::GcRc && hamming(a, reverse_complement(b)) < p.d)
    return false;
  return true;
}

AdjacencyMatrix random_graph(std::size_t n, double density, Rng& rng) {
  AdjacencyMatrix adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.next_unit() < density) adj.set(i, j);
  return adj;
}

}  // namespace

TEST_CASE("published statistics for the small graphs") {
  const ConflictGraph rc542 = build_conflict_graph(GraphKind::GcRc, CodeParams(5, 4, 2));
  const GraphStats s542 = graph_stats(rc542);
  CHECK(s542.vertices == 208);
  CHECK(s542.edges == 6208);
  CHECK(s542.density == doctest::Approx(0.28837).epsilon(2e-5));

  const ConflictGraph gc532 = build_conflict_graph(GraphKind::GcOnly, CodeParams(5, 3, 2));
  const GraphStats s532 = graph_stats(gc532);
  CHECK(s532.vertices == 320);
  CHECK(s532.edges == 44800);
  CHECK(s532.density == doctest::Approx(0.87774).epsilon(2e-5));
}

TEST_CASE("vertices satisfy the admissibility filter in canonical order") {
  for (const GraphKind kind : {GraphKind::GcRc, GraphKind::GcOnly}) {
    const CodeParams p(5, 3, 2);
    const ConflictGraph g = build_conflict_graph(kind, p);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      CHECK(gc_content(g.vertices[i]) == p.w);
      if (kind == GraphKind::GcRc)
        CHECK(hamming(g.vertices[i], reverse_complement(g.vertices[i])) >= p.d);
      if (i > 0) CHECK(g.vertices[i - 1] < g.vertices[i]);
    }
  }
}

TEST_CASE("adjacency agrees with a direct recomputation, exhaustive n <= 6") {
  for (const GraphKind kind : {GraphKind::GcRc, GraphKind::GcOnly}) {
    for (const CodeParams p : {CodeParams(4, 3, 2), CodeParams(5, 4, 2), CodeParams(6, 5, 3)}) {
      const ConflictGraph g = build_conflict_graph(kind, p);
      for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        CHECK_FALSE(g.adj.at(i, i));
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
          const bool expected = expect_edge(kind, p, g.vertices[i], g.vertices[j]);
          CHECK(g.adj.at(i, j) == expected);
          CHECK(g.adj.at(j, i) == expected);
        }
      }
    }
  }
}

TEST_CASE("adjacency sampled for n = 7") {
  const CodeParams p(7, 5, 3);
  const ConflictGraph g = build_conflict_graph(GraphKind::GcRc, p);
  Rng rng(47);
  for (int trial = 0; trial < 20000; ++trial) {
    const auto i = static_cast<std::size_t>(rng.next_below(g.vertices.size()));
    const auto j = static_cast<std::size_t>(rng.next_below(g.vertices.size()));
    if (i == j) continue;
    CHECK(g.adj.at(i, j) == expect_edge(GraphKind::GcRc, p, g.vertices[i], g.vertices[j]));
  }
}

TEST_CASE("the rc-filtered graph embeds into the gc-only graph") {
  const CodeParams p(5, 3, 2);
  const ConflictGraph rc = build_conflict_graph(GraphKind::GcRc, p);
  const ConflictGraph gc = build_conflict_graph(GraphKind::GcOnly, p);

  std::set<std::uint64_t> gc_vertices;
  for (const Sequence& s : gc.vertices) gc_vertices.insert(s.packed());
  std::vector<std::size_t> to_gc;
  for (const Sequence& s : rc.vertices) {
    CHECK(gc_vertices.count(s.packed()) == 1);
    const auto it = std::lower_bound(gc.vertices.begin(), gc.vertices.end(), s);
    to_gc.push_back(static_cast<std::size_t>(it - gc.vertices.begin()));
  }
  for (std::size_t i = 0; i < rc.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < rc.vertices.size(); ++j)
      if (rc.adj.at(i, j)) CHECK(gc.adj.at(to_gc[i], to_gc[j]));
}

TEST_CASE("a greedy clique converts into a valid code") {
  Rng rng(53);
  for (const GraphKind kind : {GraphKind::GcRc, GraphKind::GcOnly}) {
    const CodeParams p(5, 3, 2);
    const ConflictGraph g = build_conflict_graph(kind, p);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Sequence> clique;
      std::vector<std::size_t> candidates(g.vertices.size());
      std::iota(candidates.begin(), candidates.end(), 0u);
      std::size_t current = rng.next_below(g.vertices.size());
      for (;;) {
        clique.push_back(g.vertices[current]);
        std::vector<std::size_t> next;
        for (const std::size_t c : candidates)
          if (c != current && g.adj.at(current, c)) next.push_back(c);
        if (next.empty()) break;
        candidates = next;
        current = candidates[rng.next_below(candidates.size())];
      }
      const CodeSet code(p, clique);
      if (kind == GraphKind::GcRc)
        CHECK(verify_strong(code).valid);
      else
        CHECK(verify_weak(code).valid);
    }
  }
}

TEST_CASE("stats conventions for degenerate graphs") {
  const GraphStats one = graph_stats(AdjacencyMatrix(1));
  CHECK(one.vertices == 1);
  CHECK(one.edges == 0);
  CHECK(one.density == 0.0);

  AdjacencyMatrix pair(2);
  pair.set(0, 1);
  const GraphStats two = graph_stats(pair);
  CHECK(two.edges == 1);
  CHECK(two.density == 1.0);
}

TEST_CASE("vertex budget guard") {
  CHECK_THROWS_AS(build_conflict_graph(GraphKind::GcRc, CodeParams(20, 3, 10)), Error);
  try {
    build_conflict_graph(GraphKind::GcRc, CodeParams(20, 3, 10));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
    // C(20,10) * 2^20: the error names the offending count.
    CHECK(std::string(e.what()).find("193730707456") != std::string::npos);
  }
  CHECK_THROWS_AS(build_conflict_graph(GraphKind::GcOnly, CodeParams(5, 3, 2), 100), Error);
}

TEST_CASE("dimacs export carries the header, labels and edges") {
  const ConflictGraph g = build_conflict_graph(GraphKind::GcRc, CodeParams(5, 4, 2));
  std::ostringstream out;
  write_dimacs(g, out);
  const std::string text = out.str();
  CHECK(text.rfind("p edge 208 6208\n", 0) == 0);
  CHECK(text.find("c vertex 1 ") != std::string::npos);

  std::istringstream in(text);
  const LabeledGraph back = read_dimacs(in);
  CHECK(back.adj == g.adj);
  REQUIRE(back.labels.size() == g.vertices.size());
  for (std::size_t i = 0; i < back.labels.size(); ++i)
    CHECK(back.labels[i] == g.vertices[i].str());
}

TEST_CASE("dimacs round-trip on random graphs") {
  Rng rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + rng.next_below(40);
    const AdjacencyMatrix adj = random_graph(n, rng.next_unit(), rng);
    std::ostringstream out;
    write_dimacs(adj, {}, out);
    std::istringstream in(out.str());
    const LabeledGraph back = read_dimacs(in);
    CHECK(back.adj == adj);
    CHECK(back.labels.empty());
  }
}

TEST_CASE("dimacs reader rejects malformed input") {
  const auto code_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_dimacs(in);
      return Errc::InvalidParams;  // placeholder meaning "no error"
    } catch (const Error& e) {
      return e.code();
    }
  };
  CHECK(code_of("") == Errc::MissingHeader);
  CHECK(code_of("c only a comment\n") == Errc::MissingHeader);
  CHECK(code_of("e 1 2\np edge 2 1\n") == Errc::ParseError);       // edge first
  CHECK(code_of("p edge 2 2\ne 1 2\n") == Errc::ParseError);       // count short
  CHECK(code_of("p edge 2 0\ne 1 2\n") == Errc::ParseError);       // count long
  CHECK(code_of("p edge 2 1\ne 1 3\n") == Errc::ParseError);       // out of range
  CHECK(code_of("p edge 2 1\ne 1 1\n") == Errc::ParseError);       // self loop
  CHECK(code_of("p edge 2 2\ne 1 2\ne 2 1\n") == Errc::ParseError);  // duplicate
  CHECK(code_of("p edge 2 1\nq 1 2\n") == Errc::ParseError);       // unknown tag
  CHECK(code_of("p edge 2 1\np edge 2 1\ne 1 2\n") == Errc::ParseError);
  CHECK(code_of("p edge 1 0\n") == Errc::InvalidParams);           // clean parse
}
