#include "dnacodex/reference_data.hpp"

#include <array>

namespace dnacodex {

namespace {

constexpr std::array<RecordedGraphRow, 7> kGraphRows = {{
    {GraphKind::GcRc, 5, 3, 2, 304, 34848, 0.75664, 15, 8388608},
    {GraphKind::GcRc, 5, 4, 2, 208, 6208, 0.28837, 3, 16384},
    {GraphKind::GcRc, 6, 4, 3, 864, 223176, 0.59862, 16, 58720256},
    {GraphKind::GcRc, 7, 5, 3, 3904, 3945728, 0.51790, 11, 446693376},
    {GraphKind::GcRc, 7, 6, 3, 2224, 241664, 0.09776, 2, 241664},
    {GraphKind::GcOnly, 5, 3, 2, 320, 44800, 0.87774, 30, 12288},
    {GraphKind::GcOnly, 6, 5, 3, 1280, 437120, 0.53401, 8, 248709120},
}};

constexpr BoundStatus kE = BoundStatus::Exact;
constexpr BoundStatus kL = BoundStatus::LowerBound;

constexpr std::array<RecordedBound, 78> kBounds = {{
    {4, 3, 6, kE},      {4, 4, 2, kE},
    {5, 3, 15, kE},     {5, 4, 3, kE},      {5, 5, 1, kE},
    {6, 3, 44, kL},     {6, 4, 16, kE},     {6, 5, 4, kE},     {6, 6, 2, kE},
    {7, 3, 135, kL},    {7, 4, 36, kL},     {7, 5, 11, kE},    {7, 6, 2, kE},
    {7, 7, 1, kE},
    {8, 3, 528, kL},    {8, 4, 128, kL},    {8, 5, 28, kL},    {8, 6, 12, kL},
    {8, 7, 2, kE},      {8, 8, 2, kE},
    {9, 3, 1354, kL},   {9, 4, 275, kL},    {9, 5, 67, kL},    {9, 6, 20, kL},
    {9, 7, 8, kL},      {9, 8, 2, kE},      {9, 9, 1, kE},
    {10, 3, 4542, kL},  {10, 4, 855, kL},   {10, 5, 175, kL},  {10, 6, 54, kL},
    {10, 7, 16, kL},    {10, 8, 8, kE},     {10, 9, 2, kE},    {10, 10, 2, kE},
    {11, 3, 14405, kL}, {11, 4, 2457, kL},  {11, 5, 477, kL},  {11, 6, 117, kL},
    {11, 7, 36, kL},    {11, 8, 13, kL},    {11, 9, 5, kE},    {11, 10, 2, kE},
    {11, 11, 1, kE},
    {12, 3, 58976, kL}, {12, 4, 14624, kL}, {12, 5, 1369, kL}, {12, 6, 924, kL},
    {12, 7, 83, kL},    {12, 8, 28, kL},    {12, 9, 11, kL},   {12, 10, 4, kE},
    {12, 11, 2, kE},    {12, 12, 2, kE},
    {13, 3, 167263, kL}, {13, 4, 27376, kL}, {13, 5, 3954, kL}, {13, 6, 924, kL},
    {13, 7, 205, kL},   {13, 8, 61, kL},    {13, 9, 22, kL},   {13, 10, 9, kL},
    {13, 11, 4, kE},    {13, 12, 2, kE},    {13, 13, 1, kE},
    {14, 3, 430080, kL}, {14, 4, 192192, kL}, {14, 5, 11878, kL},
    {14, 6, 2963, kL},  {14, 7, 749, kL},   {14, 8, 180, kL},  {14, 9, 46, kL},
    {14, 10, 16, kL},   {14, 11, 7, kL},    {14, 12, 4, kE},   {14, 13, 2, kE},
    {14, 14, 2, kE},
}};

constexpr std::array<RecordedWeakValue, 1> kWeakValues = {{
    {12, 10, 6, 9},
}};

}  // namespace

const char* to_string(BoundStatus status) noexcept {
  return status == BoundStatus::Exact ? "exact" : "lower_bound";
}

std::span<const RecordedGraphRow> recorded_graph_rows() { return kGraphRows; }

std::span<const RecordedBound> recorded_bounds() { return kBounds; }

std::optional<RecordedBound> recorded_bound(int n, int d) {
  for (const RecordedBound& row : kBounds)
    if (row.n == n && row.d == d) return row;
  return std::nullopt;
}

std::span<const RecordedWeakValue> recorded_weak_values() { return kWeakValues; }

std::optional<RecordedWeakValue> recorded_weak_value(int n, int d, int w) {
  for (const RecordedWeakValue& row : kWeakValues)
    if (row.n == n && row.d == d && row.w == w) return row;
  return std::nullopt;
}

}  // namespace dnacodex
