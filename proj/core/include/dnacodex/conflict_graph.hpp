#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dnacodex/codeset.hpp"

namespace dnacodex {

// Symmetric bit-matrix with an empty diagonal. Rows are 64-bit word arrays
// sized for fast intersection loops.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(std::size_t vertex_count);

  std::size_t size() const noexcept { return size_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool at(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }

  // Sets both directions; i == j is ignored.
  void set(std::size_t i, std::size_t j) noexcept;

  std::span<const std::uint64_t> row(std::size_t i) const noexcept {
    return {bits_.data() + i * words_, words_};
  }

  std::size_t degree(std::size_t i) const noexcept;
  std::uint64_t edge_count() const noexcept;

  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

enum class GraphKind { GcRc, GcOnly };

const char* to_string(GraphKind kind) noexcept;

// Vertices are the admissible sequences in canonical enumeration order.
//   GcRc:   GC(s) = w and hamming(s, RC(s)) >= d; edge iff both pair
//           distances (plain and reverse-complement) are >= d.
//   GcOnly: GC(s) = w; edge iff the plain pair distance is >= d.
struct ConflictGraph {
  GraphKind kind;
  CodeParams params;
  std::vector<Sequence> vertices;
  AdjacencyMatrix adj;
};

struct GraphStats {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  double density = 0.0;  // edges / C(vertices, 2); 0 by convention for v <= 1
};

inline constexpr std::uint64_t kDefaultVertexBudget = 50'000;

// Throws TooLarge (naming the count) when the candidate vertex count
// C(n, w) * 2^n exceeds the budget.
ConflictGraph build_conflict_graph(GraphKind kind, CodeParams params,
                                   std::uint64_t vertex_budget = kDefaultVertexBudget);

GraphStats graph_stats(const AdjacencyMatrix& adj);
GraphStats graph_stats(const ConflictGraph& graph);

// Plain graph as read back from DIMACS; labels are empty when the file had
// no vertex comments.
struct LabeledGraph {
  AdjacencyMatrix adj;
  std::vector<std::string> labels;
};

// DIMACS ascii: "p edge <v> <e>" header, "c vertex <i> <label>" comments
// mapping 1-based indices to sequences, then one "e <i> <j>" line per edge
// with i < j.
void write_dimacs(const AdjacencyMatrix& adj, std::span<const Sequence> labels,
                  std::ostream& out);
void write_dimacs(const ConflictGraph& graph, std::ostream& out);

// Strict reader: rejects self-loops, duplicate or out-of-range edges, and an
// edge count that disagrees with the header. Throws ParseError (with line
// number) or MissingHeader.
LabeledGraph read_dimacs(std::istream& in);

}  // namespace dnacodex
