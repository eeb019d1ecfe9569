#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "dnacodex/conflict_graph.hpp"

namespace dnacodex {

// Known values for the benchmark instances, bundled as regression ground
// truth. Recomputed quantities must match these; search lower bounds must
// never exceed a recorded exact value.

struct RecordedGraphRow {
  GraphKind kind;
  int n, d, w;
  std::uint64_t vertices;
  std::uint64_t edges;
  double density;
  std::size_t max_clique;
  std::uint64_t max_clique_count;
};

std::span<const RecordedGraphRow> recorded_graph_rows();

enum class BoundStatus { Exact, LowerBound };

const char* to_string(BoundStatus status) noexcept;

// Best known sizes of (n, d, floor(n/2)) codes for 4 <= n <= 14, 3 <= d <= n.
struct RecordedBound {
  int n, d;
  std::uint64_t value;
  BoundStatus status;
};

std::span<const RecordedBound> recorded_bounds();
std::optional<RecordedBound> recorded_bound(int n, int d);

// Weak-code maxima recorded for the halving deduction.
struct RecordedWeakValue {
  int n, d, w;
  std::uint64_t value;
};

std::span<const RecordedWeakValue> recorded_weak_values();
std::optional<RecordedWeakValue> recorded_weak_value(int n, int d, int w);

}  // namespace dnacodex
