#include "dnacodex/sls.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <exception>
#include <thread>

namespace dnacodex {

double acceptance_probability(std::uint64_t x, double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    raise(Errc::InvalidParams, "alpha and beta must be positive");
  if (x <= 1) return 1.0;
  if (x >= 4) return 0.0;
  return std::min(1.0, alpha * std::exp(-static_cast<double>(x) / beta));
}

SlsParams::SlsParams(CodeParams code_, std::optional<std::uint64_t> target_)
    : code(code_), target(target_) {}

void SlsParams::validate() const {
  if (target && *target < 1)
    raise(Errc::InvalidParams, "target size must be at least 1 when present");
  if (max_stagnation < 1)
    raise(Errc::InvalidParams, "max_stagnation must be at least 1");
  if (!(alpha > 0.0) || !(beta > 0.0))
    raise(Errc::InvalidParams, "alpha and beta must be positive");
  if (sample_attempts < 1)
    raise(Errc::InvalidParams, "sample_attempts must be at least 1");
}

SlsEngine::SlsEngine(SlsParams params) : params_(params), rng_(params.seed) {
  params_.validate();
}

MoveRecord SlsEngine::step() {
  const CodeParams& p = params_.code;
  return apply_candidate(
      sample_admissible(p.n, p.d, p.w, rng_, params_.sample_attempts));
}

MoveRecord SlsEngine::apply_candidate(const Sequence& candidate) {
  const CodeParams& p = params_.code;
  if (candidate.length() != p.n)
    raise(Errc::LengthMismatch, "candidate length does not match code length");

  // hamming(candidate, RC(m)) == hamming(m, RC(candidate)), so a single
  // precomputed reverse complement serves the whole scan.
  const Sequence rc = reverse_complement(candidate);
  scratch_.clear();
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (hamming(candidate, members_[i]) < p.d || hamming(members_[i], rc) < p.d)
      scratch_.push_back(i);
  }
  const std::uint64_t cost = scratch_.size();

  const double u = rng_.next_unit();
  const bool accepted = u < acceptance_probability(cost, params_.alpha, params_.beta);

  if (accepted) {
    for (auto it = scratch_.rbegin(); it != scratch_.rend(); ++it)
      members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(*it));
    const auto pos = std::lower_bound(members_.begin(), members_.end(), candidate);
    assert(pos == members_.end() || !(*pos == candidate));
    members_.insert(pos, candidate);
    if (members_.size() > best_size_) {
      best_members_ = members_;
      best_size_ = members_.size();
      iterations_ = 0;
    }
    // Only accepted moves advance the stagnation clock (the improvement
    // reset above happens first, so an improving move leaves it at 1).
    // Rejected proposals do not count: with the default alpha nearly all
    // cost >= 2 proposals are rejected, and counting them would freeze the
    // search long before it can leave a near-maximal library.
    ++iterations_;
  }
  ++total_moves_;
  return MoveRecord{candidate, cost, accepted, members_.size(), best_size_};
}

bool SlsEngine::done() const noexcept {
  if (params_.target && members_.size() == *params_.target) return true;
  return iterations_ > params_.max_stagnation;
}

CodeSet SlsEngine::current_code() const { return CodeSet(params_.code, members_); }

SlsOutcome SlsEngine::outcome() const {
  SlsOutcome out{CodeSet(params_.code, best_members_),
                 params_.target && best_size_ == *params_.target, total_moves_,
                 iterations_, params_.seed};
  return out;
}

SlsOutcome run(const SlsParams& params, const MoveObserver& observer) {
  SlsEngine engine(params);
  while (!engine.done()) {
    const MoveRecord record = engine.step();
    if (observer) observer(engine, record);
  }
  return engine.outcome();
}

SlsOutcome run_multi(const SlsParams& params, unsigned runs, unsigned workers) {
  if (runs < 1) raise(Errc::InvalidParams, "runs must be at least 1");
  params.validate();

  std::vector<std::optional<SlsOutcome>> results(runs);
  std::vector<std::exception_ptr> errors(runs);
  std::atomic<unsigned> next{0};

  auto work = [&] {
    for (;;) {
      const unsigned i = next.fetch_add(1);
      if (i >= runs) return;
      SlsParams p = params;
      p.seed = params.seed + i;
      try {
        results[i] = run(p);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  unsigned pool = workers != 0 ? workers : std::max(1u, std::thread::hardware_concurrency());
  pool = std::min(pool, runs);
  if (pool <= 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (unsigned t = 0; t < pool; ++t) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }

  // First fatal error wins, by run index.
  for (unsigned i = 0; i < runs; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);

  std::size_t best = 0;
  for (unsigned i = 1; i < runs; ++i)
    if (results[i]->code.size() > results[best]->code.size()) best = i;
  return *results[best];
}

}  // namespace dnacodex
