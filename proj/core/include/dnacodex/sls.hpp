#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dnacodex/codeset.hpp"
#include "dnacodex/rng.hpp"

namespace dnacodex {

// Piecewise acceptance probability for an eviction count x:
//   1 for x in {0, 1}, alpha * exp(-x / beta) for x in {2, 3}, 0 for x >= 4.
// Clamped to 1 for exotic alpha. Throws InvalidParams for non-positive
// alpha or beta.
double acceptance_probability(std::uint64_t x, double alpha, double beta);

struct SlsParams {
  SlsParams(CodeParams code_, std::optional<std::uint64_t> target_ = std::nullopt);

  CodeParams code;
  // Desired code size; absent means run to stagnation only.
  std::optional<std::uint64_t> target;
  // Stop after this many consecutive accepted moves without an improvement
  // of the best size. Rejected proposals do not advance the clock.
  std::uint64_t max_stagnation = 1'000'000;
  // Midpoints of the ranges that are known to work well.
  double alpha = 6.5e-5;
  double beta = 1.45;
  std::uint64_t seed = 0;
  std::uint64_t sample_attempts = kDefaultSampleAttempts;

  void validate() const;
};

struct MoveRecord {
  Sequence candidate;
  std::uint64_t cost = 0;  // number of members the move would evict
  bool accepted = false;
  std::size_t size_after = 0;
  std::uint64_t best_after = 0;
};

struct SlsOutcome {
  CodeSet code;  // best code seen, not necessarily the final library
  bool reached_target = false;
  std::uint64_t total_moves = 0;
  std::uint64_t stagnation_at_stop = 0;
  std::uint64_t seed = 0;
};

// One search run: grow a valid code by insert-and-evict moves. The library
// is a valid code after every accepted move by construction: the inserted
// sequence is admissible and every member it conflicts with is evicted.
class SlsEngine {
 public:
  explicit SlsEngine(SlsParams params);

  // Samples an admissible candidate and applies one move. Throws Exhausted
  // when the sampler gives up.
  MoveRecord step();

  // Deterministic move core: conflict scan, acceptance draw, update. Split
  // out so tests can drive specific candidates.
  MoveRecord apply_candidate(const Sequence& candidate);

  bool done() const noexcept;

  const SlsParams& params() const noexcept { return params_; }
  const std::vector<Sequence>& current_members() const noexcept { return members_; }
  CodeSet current_code() const;
  std::uint64_t best_size() const noexcept { return best_size_; }
  std::uint64_t stagnation() const noexcept { return iterations_; }
  std::uint64_t total_moves() const noexcept { return total_moves_; }

  SlsOutcome outcome() const;

 private:
  SlsParams params_;
  std::vector<Sequence> members_;       // current library, canonical order
  std::vector<Sequence> best_members_;  // snapshot of the largest library seen
  std::uint64_t best_size_ = 0;
  std::uint64_t iterations_ = 0;  // moves since the last improvement
  std::uint64_t total_moves_ = 0;
  Rng rng_;
  std::vector<std::size_t> scratch_;  // conflict indices, reused across moves
};

using MoveObserver = std::function<void(const SlsEngine&, const MoveRecord&)>;

// Runs until the target size is reached or max_stagnation consecutive
// accepted moves pass without improving the best size. Deterministic given
// (params, seed).
SlsOutcome run(const SlsParams& params, const MoveObserver& observer = {});

// Independent restarts with seeds seed, seed+1, ...; returns the outcome
// with the largest code, ties broken by lowest seed. Runs execute on up to
// `workers` threads (0 = hardware concurrency); the result does not depend
// on scheduling.
SlsOutcome run_multi(const SlsParams& params, unsigned runs, unsigned workers = 0);

}  // namespace dnacodex
