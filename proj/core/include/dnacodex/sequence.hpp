#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dnacodex/errors.hpp"
#include "dnacodex/rng.hpp"

namespace dnacodex {

// Bases are packed two bits each into a single 64-bit word.
inline constexpr int kMaxSequenceLength = 32;

inline constexpr std::uint64_t kDefaultSampleAttempts = 1'000'000;

enum class Base : std::uint8_t { A = 0, C = 1, G = 2, T = 3 };

constexpr char to_char(Base b) noexcept { return "ACGT"[static_cast<unsigned>(b)]; }

// A<->T, C<->G. In the two-bit encoding this is code -> 3 - code.
constexpr Base complement(Base b) noexcept {
  return static_cast<Base>(3u - static_cast<unsigned>(b));
}

constexpr bool is_gc(Base b) noexcept { return b == Base::C || b == Base::G; }

// Fixed-length word over {A, C, G, T}. The leftmost base sits in the most
// significant occupied two-bit lane, so for equal lengths integer order on
// the packed value equals lexicographic order on the rendered string with
// A < C < G < T. Immutable after construction.
class Sequence {
 public:
  // Parses an uppercase ACGT string. Throws EmptyInput, InvalidSymbol (first
  // offending character, 1-based position) or InvalidParams (too long).
  static Sequence parse(std::string_view text);

  // Wraps an already-packed word. Lanes above 2*length must be zero.
  static Sequence from_packed(int length, std::uint64_t packed);

  int length() const noexcept { return length_; }
  std::uint64_t packed() const noexcept { return bits_; }

  // 0-based from the left.
  Base at(int i) const noexcept {
    return static_cast<Base>((bits_ >> (2 * (length_ - 1 - i))) & 3u);
  }

  std::string str() const;

  friend bool operator==(const Sequence&, const Sequence&) = default;
  friend std::strong_ordering operator<=>(const Sequence&, const Sequence&) = default;

 private:
  Sequence(int length, std::uint64_t bits) : length_(length), bits_(bits) {}

  int length_ = 0;
  std::uint64_t bits_ = 0;
};

// Number of positions where a and b differ. Throws LengthMismatch.
int hamming(const Sequence& a, const Sequence& b);

// Reversal composed with base-wise complement; an involution that preserves
// GC-content.
Sequence reverse_complement(const Sequence& s) noexcept;

// Number of C/G bases.
int gc_content(const Sequence& s) noexcept;

// C(n, w) * 2^n, the number of length-n sequences with GC-content w.
// Throws InvalidParams for n outside [1, 32] or w outside [0, n].
std::uint64_t constant_gc_count(int n, int w);

// Visits every length-n sequence with GC-content w in lexicographic order
// of the rendered string.
void for_each_constant_gc(int n, int w,
                          const std::function<void(const Sequence&)>& visit);

std::vector<Sequence> all_constant_gc(int n, int w);

// Uniform over the constant_gc_count(n, w) candidates; deterministic given
// the generator state.
Sequence sample_constant_gc(int n, int w, Rng& rng);

// Rejection-samples sample_constant_gc until hamming(s, RC(s)) >= d. Throws
// Exhausted after max_attempts rejections.
Sequence sample_admissible(int n, int d, int w, Rng& rng,
                           std::uint64_t max_attempts = kDefaultSampleAttempts);

}  // namespace dnacodex
