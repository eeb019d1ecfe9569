#include "dnacodex/conflict_graph.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace dnacodex {

AdjacencyMatrix::AdjacencyMatrix(std::size_t vertex_count)
    : size_(vertex_count),
      words_((vertex_count + 63) / 64),
      bits_(size_ * words_, 0) {}

void AdjacencyMatrix::set(std::size_t i, std::size_t j) noexcept {
  if (i == j) return;
  bits_[i * words_ + j / 64] |= 1ULL << (j % 64);
  bits_[j * words_ + i / 64] |= 1ULL << (i % 64);
}

std::size_t AdjacencyMatrix::degree(std::size_t i) const noexcept {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_; ++w)
    total += static_cast<std::size_t>(std::popcount(bits_[i * words_ + w]));
  return total;
}

std::uint64_t AdjacencyMatrix::edge_count() const noexcept {
  std::uint64_t twice = 0;
  for (const std::uint64_t word : bits_) twice += static_cast<std::uint64_t>(std::popcount(word));
  return twice / 2;
}

const char* to_string(GraphKind kind) noexcept {
  return kind == GraphKind::GcRc ? "gcrc" : "gc";
}

ConflictGraph build_conflict_graph(GraphKind kind, CodeParams params,
                                   std::uint64_t vertex_budget) {
  const std::uint64_t candidates = constant_gc_count(params.n, params.w);
  if (candidates > vertex_budget)
    raise(Errc::TooLarge, "candidate vertex count " + std::to_string(candidates) +
                              " exceeds budget " + std::to_string(vertex_budget));

  std::vector<Sequence> vertices;
  vertices.reserve(static_cast<std::size_t>(candidates));
  for_each_constant_gc(params.n, params.w, [&](const Sequence& s) {
    if (kind == GraphKind::GcRc && hamming(s, reverse_complement(s)) < params.d)
      return;
    vertices.push_back(s);
  });

  const std::size_t v = vertices.size();
  std::vector<std::uint64_t> packed(v), rc_packed(v);
  for (std::size_t i = 0; i < v; ++i) {
    packed[i] = vertices[i].packed();
    rc_packed[i] = reverse_complement(vertices[i]).packed();
  }

  constexpr std::uint64_t kLaneLow = 0x5555555555555555ULL;
  const auto base_distance = [](std::uint64_t a, std::uint64_t b) {
    const std::uint64_t x = a ^ b;
    return std::popcount((x | (x >> 1)) & kLaneLow);
  };

  AdjacencyMatrix adj(v);
  const int d = params.d;
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      if (base_distance(packed[i], packed[j]) < d) continue;
      if (kind == GraphKind::GcRc && base_distance(packed[i], rc_packed[j]) < d)
        continue;
      adj.set(i, j);
    }
  }
  return ConflictGraph{kind, params, std::move(vertices), std::move(adj)};
}

GraphStats graph_stats(const AdjacencyMatrix& adj) {
  GraphStats stats;
  stats.vertices = adj.size();
  stats.edges = adj.edge_count();
  if (stats.vertices > 1) {
    const double pairs =
        0.5 * static_cast<double>(stats.vertices) * static_cast<double>(stats.vertices - 1);
    stats.density = static_cast<double>(stats.edges) / pairs;
  }
  return stats;
}

GraphStats graph_stats(const ConflictGraph& graph) { return graph_stats(graph.adj); }

void write_dimacs(const AdjacencyMatrix& adj, std::span<const Sequence> labels,
                  std::ostream& out) {
  const std::size_t v = adj.size();
  out << "p edge " << v << " " << adj.edge_count() << "\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    out << "c vertex " << (i + 1) << " " << labels[i].str() << "\n";
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j)
      if (adj.at(i, j)) out << "e " << (i + 1) << " " << (j + 1) << "\n";
}

void write_dimacs(const ConflictGraph& graph, std::ostream& out) {
  write_dimacs(graph.adj, graph.vertices, out);
}

LabeledGraph read_dimacs(std::istream& in) {
  bool got_header = false;
  std::size_t v = 0;
  std::uint64_t declared_edges = 0;
  std::uint64_t read_edges = 0;
  AdjacencyMatrix adj(0);
  std::vector<std::string> labels;
  bool any_label = false;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "c") {
      std::string sub;
      fields >> sub;
      if (sub == "vertex" && got_header) {
        std::size_t index = 0;
        std::string label;
        if (fields >> index >> label && index >= 1 && index <= v) {
          labels[index - 1] = label;
          any_label = true;
        }
      }
      continue;
    }
    if (tag == "p") {
      if (got_header)
        raise(Errc::ParseError, "line " + std::to_string(lineno) + ": duplicate header");
      std::string format;
      long long nv = -1, ne = -1;
      if (!(fields >> format >> nv >> ne) || format != "edge" || nv < 0 || ne < 0)
        raise(Errc::ParseError, "line " + std::to_string(lineno) + ": malformed header");
      v = static_cast<std::size_t>(nv);
      declared_edges = static_cast<std::uint64_t>(ne);
      adj = AdjacencyMatrix(v);
      labels.assign(v, {});
      got_header = true;
      continue;
    }
    if (tag == "e") {
      if (!got_header)
        raise(Errc::ParseError,
              "line " + std::to_string(lineno) + ": edge before header");
      long long a = 0, b = 0;
      if (!(fields >> a >> b))
        raise(Errc::ParseError, "line " + std::to_string(lineno) + ": malformed edge");
      if (a < 1 || b < 1 || a > static_cast<long long>(v) || b > static_cast<long long>(v))
        raise(Errc::ParseError,
              "line " + std::to_string(lineno) + ": edge endpoint out of range");
      if (a == b)
        raise(Errc::ParseError, "line " + std::to_string(lineno) + ": self-loop");
      const auto i = static_cast<std::size_t>(a - 1);
      const auto j = static_cast<std::size_t>(b - 1);
      if (adj.at(i, j))
        raise(Errc::ParseError, "line " + std::to_string(lineno) + ": duplicate edge");
      adj.set(i, j);
      ++read_edges;
      continue;
    }
    raise(Errc::ParseError,
          "line " + std::to_string(lineno) + ": unknown line type '" + tag + "'");
  }

  if (!got_header) raise(Errc::MissingHeader, "no 'p edge' header found");
  if (read_edges != declared_edges)
    raise(Errc::ParseError, "header declares " + std::to_string(declared_edges) +
                                " edges but file has " + std::to_string(read_edges));
  if (!any_label) labels.clear();
  return LabeledGraph{std::move(adj), std::move(labels)};
}

}  // namespace dnacodex
