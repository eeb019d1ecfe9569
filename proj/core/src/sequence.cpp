#include "dnacodex/sequence.hpp"

#include <array>
#include <bit>
#include <cassert>
#include <numeric>

namespace dnacodex {

namespace {

constexpr std::uint64_t kLaneLow = 0x5555555555555555ULL;

void check_params(int n, int w) {
  if (n < 1 || n > kMaxSequenceLength)
    raise(Errc::InvalidParams,
          "sequence length must be in [1, 32], got " + std::to_string(n));
  if (w < 0 || w > n)
    raise(Errc::InvalidParams, "GC weight must be in [0, " + std::to_string(n) +
                                   "], got " + std::to_string(w));
}

// One bit per base position: set where the two-bit lanes of x are nonzero.
std::uint64_t lanes_nonzero(std::uint64_t x) noexcept {
  return (x | (x >> 1)) & kLaneLow;
}

}  // namespace

Sequence Sequence::parse(std::string_view text) {
  if (text.empty()) raise(Errc::EmptyInput, "empty sequence string");
  if (text.size() > static_cast<std::size_t>(kMaxSequenceLength))
    raise(Errc::InvalidParams, "sequence longer than 32 bases: length " +
                                   std::to_string(text.size()));
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned code;
    switch (text[i]) {
      case 'A': code = 0; break;
      case 'C': code = 1; break;
      case 'G': code = 2; break;
      case 'T': code = 3; break;
      default:
        raise(Errc::InvalidSymbol, std::string("invalid symbol '") + text[i] +
                                       "' at position " + std::to_string(i + 1));
    }
    bits = (bits << 2) | code;
  }
  return Sequence(static_cast<int>(text.size()), bits);
}

Sequence Sequence::from_packed(int length, std::uint64_t packed) {
  if (length < 1 || length > kMaxSequenceLength)
    raise(Errc::InvalidParams, "sequence length must be in [1, 32]");
  assert(length == kMaxSequenceLength || (packed >> (2 * length)) == 0);
  return Sequence(length, packed);
}

std::string Sequence::str() const {
  std::string out(static_cast<std::size_t>(length_), '?');
  for (int i = 0; i < length_; ++i) out[static_cast<std::size_t>(i)] = to_char(at(i));
  return out;
}

int hamming(const Sequence& a, const Sequence& b) {
  if (a.length() != b.length())
    raise(Errc::LengthMismatch, "hamming distance needs equal lengths, got " +
                                    std::to_string(a.length()) + " and " +
                                    std::to_string(b.length()));
  return std::popcount(lanes_nonzero(a.packed() ^ b.packed()));
}

Sequence reverse_complement(const Sequence& s) noexcept {
  const int n = s.length();
  const std::uint64_t mask =
      n == kMaxSequenceLength ? ~0ULL : ((1ULL << (2 * n)) - 1);
  std::uint64_t x = ~s.packed() & mask;  // two-bit complement is 3 - code
  std::uint64_t rev = 0;
  for (int i = 0; i < n; ++i) {
    rev = (rev << 2) | (x & 3u);
    x >>= 2;
  }
  return Sequence::from_packed(n, rev);
}

int gc_content(const Sequence& s) noexcept {
  // A two-bit lane holds 01 or 10 exactly for C and G.
  const std::uint64_t x = s.packed();
  return std::popcount((x ^ (x >> 1)) & kLaneLow &
                       (s.length() == kMaxSequenceLength
                            ? ~0ULL
                            : ((1ULL << (2 * s.length())) - 1)));
}

std::uint64_t constant_gc_count(int n, int w) {
  check_params(n, w);
  std::uint64_t binom = 1;
  for (int i = 1; i <= w; ++i)
    binom = binom * static_cast<std::uint64_t>(n - w + i) /
            static_cast<std::uint64_t>(i);
  return binom << n;
}

namespace {

void enumerate_rec(int n, int pos, int gc_left, std::uint64_t prefix,
                   const std::function<void(const Sequence&)>& visit) {
  if (pos == n) {
    visit(Sequence::from_packed(n, prefix));
    return;
  }
  const int rest = n - pos - 1;
  for (unsigned code = 0; code < 4; ++code) {
    const int next_gc = gc_left - (code == 1 || code == 2 ? 1 : 0);
    if (next_gc < 0 || next_gc > rest) continue;
    enumerate_rec(n, pos + 1, next_gc, (prefix << 2) | code, visit);
  }
}

}  // namespace

void for_each_constant_gc(int n, int w,
                          const std::function<void(const Sequence&)>& visit) {
  check_params(n, w);
  enumerate_rec(n, 0, w, 0, visit);
}

std::vector<Sequence> all_constant_gc(int n, int w) {
  std::vector<Sequence> out;
  out.reserve(static_cast<std::size_t>(constant_gc_count(n, w)));
  for_each_constant_gc(n, w, [&out](const Sequence& s) { out.push_back(s); });
  return out;
}

Sequence sample_constant_gc(int n, int w, Rng& rng) {
  check_params(n, w);
  // Uniform w-subset of positions by partial Fisher-Yates, then one coin per
  // position: C or G on GC positions, A or T elsewhere.
  std::array<int, kMaxSequenceLength> pos{};
  std::iota(pos.begin(), pos.begin() + n, 0);
  std::uint32_t gc_mask = 0;
  for (int i = 0; i < w; ++i) {
    const int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - i)));
    std::swap(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(j)]);
    gc_mask |= 1u << pos[static_cast<std::size_t>(i)];
  }
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) {
    const bool coin = rng.next_bit();
    unsigned code;
    if ((gc_mask >> i) & 1u)
      code = coin ? 2u : 1u;  // G : C
    else
      code = coin ? 3u : 0u;  // T : A
    bits = (bits << 2) | code;
  }
  return Sequence::from_packed(n, bits);
}

Sequence sample_admissible(int n, int d, int w, Rng& rng,
                           std::uint64_t max_attempts) {
  check_params(n, w);
  if (d < 1 || d > n)
    raise(Errc::InvalidParams, "distance must be in [1, " + std::to_string(n) +
                                   "], got " + std::to_string(d));
  if (max_attempts < 1)
    raise(Errc::InvalidParams, "max_attempts must be at least 1");
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    const Sequence s = sample_constant_gc(n, w, rng);
    if (hamming(s, reverse_complement(s)) >= d) return s;
  }
  raise(Errc::Exhausted,
        "no admissible sequence after " + std::to_string(max_attempts) +
            " attempts for (n=" + std::to_string(n) + ", d=" + std::to_string(d) +
            ", w=" + std::to_string(w) + ")");
}

}  // namespace dnacodex
