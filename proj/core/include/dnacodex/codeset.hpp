#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "dnacodex/sequence.hpp"

namespace dnacodex {

// (n, d, w): sequence length, minimum distance, GC weight. Bounds are
// enforced at construction.
struct CodeParams {
  CodeParams(int n_, int d_, int w_);

  int n;
  int d;
  int w;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

// A set of equal-length sequences with shared parameters. Members are kept
// deduplicated in canonical (lexicographic) order, so serialization is
// deterministic.
class CodeSet {
 public:
  explicit CodeSet(CodeParams params) : params_(params) {}
  CodeSet(CodeParams params, std::vector<Sequence> members);

  const CodeParams& params() const noexcept { return params_; }
  const std::vector<Sequence>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  bool contains(const Sequence& s) const noexcept;

  // Set semantics: inserting an existing member is a no-op and returns
  // false. Throws LengthMismatch if s has the wrong length.
  bool insert(const Sequence& s);
  bool erase(const Sequence& s) noexcept;

 private:
  CodeParams params_;
  std::vector<Sequence> members_;
};

enum class ViolationKind { HammingPair, ComplementPair, SelfComplement, GcContent };

const char* to_string(ViolationKind kind) noexcept;

struct Violation {
  ViolationKind kind;
  Sequence first;
  std::optional<Sequence> second;  // present for pair constraints
  int value;                       // the measured distance or GC count
};

// valid iff violations is empty. Reporting is exhaustive, not fail-fast.
struct VerifyReport {
  bool valid = true;
  std::vector<Violation> violations;
};

// Hamming distance and constant GC-content constraints only.
VerifyReport verify_weak(const CodeSet& code);

// verify_weak plus hamming(s, RC(t)) >= d for all ordered pairs including
// t = s. By the RC-distance symmetry it suffices to check unordered pairs
// plus the diagonal.
VerifyReport verify_strong(const CodeSet& code);

// Members t with hamming(s, t) < d or hamming(s, RC(t)) < d. If s is a
// member the result contains s. Throws LengthMismatch.
std::vector<Sequence> conflicts(const CodeSet& code, const Sequence& s);

// floor(a_gc / 2): upper bound on the maximum strong-code size given the
// maximum weak-code size a_gc. Throws InvalidParams for a_gc < 1.
std::uint64_t halving_upper_bound(std::uint64_t a_gc);

// Code file format: one ACGT sequence per line, '#' comment lines, blank
// lines ignored. The writer emits "# n=<n> d=<d> w=<w> size=<k>" and the
// members in canonical order.
void write_code_file(const CodeSet& code, std::ostream& out);
std::string code_file_string(const CodeSet& code);

// Reads members for the given parameters. Throws ParseError-family errors on
// malformed lines and LengthMismatch when a line disagrees with params.n.
CodeSet read_code_file(std::istream& in, CodeParams params);

}  // namespace dnacodex
