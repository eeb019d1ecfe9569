#include "dnacodex/clique.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "dnacodex/rng.hpp"

namespace dnacodex {

namespace {

using Clock = std::chrono::steady_clock;

// Non-adjacent vertices with identical adjacency rows are interchangeable in
// any clique, so all but the lowest-indexed one can be dropped without
// changing the maximum clique size. (Identical rows imply non-adjacency:
// an edge would put each endpoint in the other's row but not its own.)
// Removing vertices can create fresh twins, so the pass iterates. The
// reverse-complement pairing of GcRc conflict graphs makes this halve them.
struct TwinReduction {
  AdjacencyMatrix adj;
  std::vector<std::uint32_t> keep;  // reduced index -> original index
};

TwinReduction reduce_twins(const AdjacencyMatrix& original) {
  std::vector<std::uint32_t> keep(original.size());
  std::iota(keep.begin(), keep.end(), 0u);
  AdjacencyMatrix current = original;

  for (;;) {
    const std::size_t v = current.size();
    if (v < 2) break;
    std::vector<std::uint32_t> by_row(v);
    std::iota(by_row.begin(), by_row.end(), 0u);
    std::sort(by_row.begin(), by_row.end(),
              [&current](std::uint32_t a, std::uint32_t b) {
                const auto ra = current.row(a), rb = current.row(b);
                for (std::size_t w = 0; w < ra.size(); ++w)
                  if (ra[w] != rb[w]) return ra[w] < rb[w];
                return a < b;
              });
    std::vector<bool> drop(v, false);
    bool any = false;
    for (std::size_t k = 1; k < v; ++k) {
      const auto ra = current.row(by_row[k - 1]), rb = current.row(by_row[k]);
      if (std::equal(ra.begin(), ra.end(), rb.begin())) {
        drop[std::max(by_row[k - 1], by_row[k])] = true;
        any = true;
      }
    }
    if (!any) break;

    std::vector<std::uint32_t> kept;
    kept.reserve(v);
    for (std::uint32_t i = 0; i < v; ++i)
      if (!drop[i]) kept.push_back(i);
    AdjacencyMatrix next(kept.size());
    for (std::size_t a = 0; a < kept.size(); ++a)
      for (std::size_t b = a + 1; b < kept.size(); ++b)
        if (current.at(kept[a], kept[b])) next.set(a, b);
    std::vector<std::uint32_t> next_keep(kept.size());
    for (std::size_t a = 0; a < kept.size(); ++a) next_keep[a] = keep[kept[a]];
    current = std::move(next);
    keep = std::move(next_keep);
  }
  return TwinReduction{std::move(current), std::move(keep)};
}


class Solver {
 public:
  Solver(const AdjacencyMatrix& original, CliqueBudget budget)
      : orig_(original),
        n_(original.size()),
        words_((n_ + 63) / 64),
        budget_(budget),
        start_(Clock::now()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0u);
    std::vector<std::size_t> degree(n_);
    for (std::size_t i = 0; i < n_; ++i) degree[i] = orig_.degree(i);
    std::stable_sort(order_.begin(), order_.end(),
                     [&degree](std::uint32_t a, std::uint32_t b) {
                       return degree[a] > degree[b];
                     });

    adj_.assign(n_ * words_, 0);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if (orig_.at(order_[a], order_[b])) {
          adj_[a * words_ + b / 64] |= 1ULL << (b % 64);
          adj_[b * words_ + a / 64] |= 1ULL << (a % 64);
        }

    suffix_best_.assign(n_, 0);
    // Depth never exceeds n_ + 1, and expand holds references into
    // scratch_ across recursion, so the vector must never reallocate.
    scratch_.reserve(n_ + 2);
    seed_incumbent();
  }

  // Branch and bound over suffix subgraphs {v_i, ..., v_n} from the back;
  // after suffix i is processed, suffix_best_[i] upper-bounds (and, without
  // an incumbent larger than the suffix optimum, equals) its max clique.
  // Once a suffix search improves the incumbent it can stop: any clique in
  // suffix i has at most 1 + suffix_best_[i+1] vertices, which the improved
  // incumbent already matches. Returns false when the budget aborted.
  bool solve() {
    for (std::size_t i = n_; i-- > 0;) {
      found_ = false;
      std::uint64_t* cand = scratch(0).cand.data();
      load_suffix_neighbors(i, cand);
      stack_.assign(1, static_cast<std::uint32_t>(i));
      expand(cand, 1, i / 64);
      if (aborted_) return false;
      suffix_best_[i] = static_cast<std::uint32_t>(best_size_);
    }
    return true;
  }

  // Enumerates cliques of exactly `target` vertices; requires a completed
  // solve() so suffix_best_ is usable for pruning. False when aborted.
  bool count(std::size_t target) {
    count_ = 0;
    if (target == 0) return true;
    for (std::size_t i = 0; i < n_; ++i) {
      if (suffix_best_[i] < target) break;  // suffix_best_ is non-increasing
      std::uint64_t* cand = scratch(0).cand.data();
      load_suffix_neighbors(i, cand);
      count_expand(cand, 1, target, i / 64);
      if (aborted_) return false;
    }
    return true;
  }

  std::size_t best_size() const noexcept { return best_size_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  std::uint64_t clique_count() const noexcept { return count_; }
  double elapsed_seconds() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

  // Best clique as sorted original indices, verified pairwise adjacent.
  std::vector<std::uint32_t> best_vertices() const {
    std::vector<std::uint32_t> out;
    out.reserve(best_.size());
    for (const std::uint32_t v : best_) out.push_back(order_[v]);
    std::sort(out.begin(), out.end());
    for (std::size_t a = 0; a < out.size(); ++a)
      for (std::size_t b = a + 1; b < out.size(); ++b)
        if (!orig_.at(out[a], out[b]))
          throw std::logic_error("clique self-check failed: result not pairwise adjacent");
    return out;
  }

 private:
  struct Scratch {
    std::vector<std::uint64_t> cand;      // child candidates
    std::vector<std::uint64_t> pending;   // vertices not yet colored
    std::vector<std::uint64_t> classbuf;  // current independent class builder
    std::vector<std::vector<std::uint64_t>> classes;
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> color;
  };

  Scratch& scratch(std::size_t depth) {
    while (scratch_.size() <= depth) {
      Scratch s;
      s.cand.assign(words_, 0);
      s.pending.assign(words_, 0);
      s.classbuf.assign(words_, 0);
      scratch_.push_back(std::move(s));
    }
    return scratch_[depth];
  }

  const std::uint64_t* row(std::size_t i) const noexcept {
    return adj_.data() + i * words_;
  }

  // cand := N(i) restricted to vertices >= i (in search order).
  void load_suffix_neighbors(std::size_t i, std::uint64_t* cand) const noexcept {
    const std::uint64_t* r = row(i);
    const std::size_t wi = i / 64;
    for (std::size_t w = 0; w < wi; ++w) cand[w] = 0;
    cand[wi] = r[wi] & (~0ULL << (i % 64));
    for (std::size_t w = wi + 1; w < words_; ++w) cand[w] = r[w];
  }

  std::size_t popcount_words(const std::uint64_t* set, std::size_t lo) const noexcept {
    std::size_t total = 0;
    for (std::size_t w = lo; w < words_; ++w)
      total += static_cast<std::size_t>(std::popcount(set[w]));
    return total;
  }

  std::size_t first_bit(const std::uint64_t* set, std::size_t lo) const noexcept {
    std::size_t w = lo;
    while (set[w] == 0) ++w;
    return w * 64 + static_cast<std::size_t>(std::countr_zero(set[w]));
  }

  bool over_budget() {
    if (++nodes_ > budget_.max_nodes) {
      aborted_ = true;
      return true;
    }
    if (budget_.max_seconds > 0.0 && (nodes_ & 8191u) == 0 &&
        elapsed_seconds() > budget_.max_seconds) {
      aborted_ = true;
      return true;
    }
    return false;
  }

  // Greedy incumbent before the exact search; pruning power scales with the
  // starting clique. Pass one grows a clique from every seed vertex taking
  // the highest-degree remaining common neighbor; pass two runs randomized
  // restarts from a fixed-seed generator, so the whole solver stays
  // deterministic.
  void seed_incumbent() {
    if (n_ == 0) return;
    std::vector<std::uint64_t> cand(words_);
    std::vector<std::uint32_t> clique;

    const auto grow_from = [&](std::size_t seed, Rng* rng) {
      clique.assign(1, static_cast<std::uint32_t>(seed));
      const std::uint64_t* r = row(seed);
      for (std::size_t w = 0; w < words_; ++w) cand[w] = r[w];
      for (;;) {
        const std::size_t cnt = popcount_words(cand.data(), 0);
        if (cnt == 0) break;
        std::size_t v;
        if (rng == nullptr) {
          v = first_bit(cand.data(), 0);
        } else {
          // Bias toward the high-degree half, picked uniformly.
          std::uint64_t pick = rng->next_below((cnt + 1) / 2);
          std::size_t w = 0;
          for (;;) {
            const auto bits = static_cast<std::uint64_t>(std::popcount(cand[w]));
            if (pick < bits) break;
            pick -= bits;
            ++w;
          }
          std::uint64_t word = cand[w];
          while (pick-- > 0) word &= word - 1;
          v = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        }
        clique.push_back(static_cast<std::uint32_t>(v));
        const std::uint64_t* rv = row(v);
        for (std::size_t k = 0; k < words_; ++k) cand[k] &= rv[k];
      }
      if (clique.size() > best_size_) {
        best_size_ = clique.size();
        best_ = clique;
      }
    };

    for (std::size_t seed = 0; seed < n_; ++seed) grow_from(seed, nullptr);
    Rng rng(0);
    const std::size_t restarts = std::min<std::size_t>(4 * n_, 20000);
    for (std::size_t r = 0; r < restarts; ++r)
      grow_from(rng.next_below(n_), &rng);
  }

  // Greedy coloring of cand into independent classes. A clique inside cand
  // takes at most one vertex per class, so the class number bounds any
  // extension. Vertices that would get color >= kmin are first re-tried in
  // lower classes via a single swap (Tomita-style renumbering), shrinking
  // the set that must be branched on. Results land in s.order/s.color in
  // ascending color order.
  void color_sort(const std::uint64_t* cand, std::size_t lo, Scratch& s,
                  std::size_t kmin) {
    s.order.clear();
    s.color.clear();
    std::uint64_t* pending = s.pending.data();
    std::uint64_t* classbuf = s.classbuf.data();
    for (std::size_t w = lo; w < words_; ++w) pending[w] = cand[w];

    std::size_t colors = 0;
    for (;;) {
      std::size_t w = lo;
      while (w < words_ && pending[w] == 0) ++w;
      if (w == words_) break;
      ++colors;
      if (s.classes.size() < colors) s.classes.emplace_back(words_, 0);
      std::uint64_t* cls = s.classes[colors - 1].data();
      for (std::size_t k = lo; k < words_; ++k) {
        classbuf[k] = pending[k];
        cls[k] = 0;
      }
      while (w < words_) {
        if (classbuf[w] == 0) {
          ++w;
          continue;
        }
        const std::size_t v =
            w * 64 + static_cast<std::size_t>(std::countr_zero(classbuf[w]));
        classbuf[w] &= classbuf[w] - 1;
        pending[v / 64] &= ~(1ULL << (v % 64));
        const std::uint64_t* r = row(v);
        for (std::size_t k = w; k < words_; ++k) classbuf[k] &= ~r[k];
        if (colors >= kmin && try_renumber(v, lo, s, colors, kmin)) continue;
        cls[v / 64] |= 1ULL << (v % 64);
      }
    }

    for (std::size_t c = 0; c < colors; ++c) {
      const std::uint64_t* cls = s.classes[c].data();
      for (std::size_t w = lo; w < words_; ++w) {
        std::uint64_t bits = cls[w];
        while (bits != 0) {
          const std::size_t v =
              w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          s.order.push_back(static_cast<std::uint32_t>(v));
          s.color.push_back(static_cast<std::uint32_t>(c + 1));
        }
      }
    }
  }

  // Try to place v in a class below kmin: find a class c1 where v has a
  // single neighbor u, then a class c2 in (c1, kmin) with no neighbor of u;
  // move u to c2 and v to c1. Keeps the coloring proper.
  bool try_renumber(std::size_t v, std::size_t lo, Scratch& s, std::size_t colors,
                    std::size_t kmin) {
    const std::uint64_t* rv = row(v);
    const std::size_t limit = std::min(kmin - 1, colors);
    for (std::size_t c1 = 0; c1 < limit; ++c1) {
      const std::uint64_t* cls1 = s.classes[c1].data();
      std::size_t u = 0, hits = 0;
      for (std::size_t w = lo; w < words_ && hits < 2; ++w) {
        std::uint64_t inter = cls1[w] & rv[w];
        while (inter != 0 && hits < 2) {
          u = w * 64 + static_cast<std::size_t>(std::countr_zero(inter));
          inter &= inter - 1;
          ++hits;
        }
      }
      if (hits == 0) {
        // No conflict at all: v slots straight into c1.
        s.classes[c1][v / 64] |= 1ULL << (v % 64);
        return true;
      }
      if (hits != 1) continue;
      const std::uint64_t* ru = row(u);
      for (std::size_t c2 = c1 + 1; c2 < limit; ++c2) {
        const std::uint64_t* cls2 = s.classes[c2].data();
        bool clash = false;
        for (std::size_t w = lo; w < words_; ++w)
          if (cls2[w] & ru[w]) {
            clash = true;
            break;
          }
        if (clash) continue;
        s.classes[c1][u / 64] &= ~(1ULL << (u % 64));
        s.classes[c2][u / 64] |= 1ULL << (u % 64);
        s.classes[c1][v / 64] |= 1ULL << (v % 64);
        return true;
      }
    }
    return false;
  }

  // Returns true to unwind the whole suffix iteration (incumbent improved or
  // budget hit). Candidates are processed in descending color order; the
  // color bound and the suffix bound c(i) prune together.
  bool expand(std::uint64_t* cand, std::size_t depth, std::size_t lo) {
    if (over_budget()) return true;
    const std::size_t cnt = popcount_words(cand, lo);
    if (cnt == 0) {
      if (depth > best_size_) {
        best_size_ = depth;
        best_ = stack_;
        found_ = true;
      }
      return found_;
    }
    if (depth + cnt <= best_size_) return false;
    if (depth + suffix_best_[first_bit(cand, lo)] <= best_size_) return false;

    Scratch& s = scratch(depth);
    const std::size_t kmin = best_size_ >= depth ? best_size_ - depth + 1 : 1;
    color_sort(cand, lo, s, kmin);
    for (std::size_t k = s.order.size(); k-- > 0;) {
      const std::size_t v = s.order[k];
      if (depth + s.color[k] <= best_size_) return false;
      cand[v / 64] &= ~(1ULL << (v % 64));
      std::uint64_t* child = s.cand.data();
      const std::uint64_t* r = row(v);
      for (std::size_t w = lo; w < words_; ++w) child[w] = cand[w] & r[w];
      stack_.push_back(static_cast<std::uint32_t>(v));
      const bool stop = expand(child, depth + 1, lo);
      stack_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  void count_expand(std::uint64_t* cand, std::size_t depth, std::size_t target,
                    std::size_t lo) {
    if (over_budget()) return;
    const std::size_t remaining = target - depth;
    if (remaining == 0) {
      ++count_;
      return;
    }
    const std::size_t cnt = popcount_words(cand, lo);
    if (remaining == 1) {
      count_ += cnt;
      return;
    }
    if (cnt < remaining) return;
    if (suffix_best_[first_bit(cand, lo)] < remaining) return;

    Scratch& s = scratch(depth);
    color_sort(cand, lo, s, remaining);
    for (std::size_t k = s.order.size(); k-- > 0;) {
      const std::size_t v = s.order[k];
      if (s.color[k] < remaining) return;  // all remaining have color <= this
      cand[v / 64] &= ~(1ULL << (v % 64));
      std::uint64_t* child = s.cand.data();
      const std::uint64_t* r = row(v);
      for (std::size_t w = lo; w < words_; ++w) child[w] = cand[w] & r[w];
      stack_.push_back(static_cast<std::uint32_t>(v));
      count_expand(child, depth + 1, target, lo);
      stack_.pop_back();
      if (aborted_) return;
    }
  }

  const AdjacencyMatrix& orig_;
  const std::size_t n_;
  const std::size_t words_;
  const CliqueBudget budget_;
  const Clock::time_point start_;

  std::vector<std::uint32_t> order_;        // search index -> original index
  std::vector<std::uint64_t> adj_;          // reordered adjacency, row-major
  std::vector<std::uint32_t> suffix_best_;  // c(i)
  std::vector<Scratch> scratch_;
  std::vector<std::uint32_t> stack_;
  std::vector<std::uint32_t> best_;
  std::size_t best_size_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t count_ = 0;
  bool found_ = false;
  bool aborted_ = false;
};

}  // namespace

CliqueResult max_clique(const AdjacencyMatrix& adj, const CliqueBudget& budget) {
  const Clock::time_point start = Clock::now();
  const TwinReduction reduced = reduce_twins(adj);
  Solver solver(reduced.adj, budget);
  const bool complete = solver.solve();
  CliqueResult result;
  result.size = solver.best_size();
  result.vertices = solver.best_vertices();
  for (std::uint32_t& v : result.vertices) v = reduced.keep[v];
  std::sort(result.vertices.begin(), result.vertices.end());
  for (std::size_t a = 0; a < result.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < result.vertices.size(); ++b)
      if (!adj.at(result.vertices[a], result.vertices[b]))
        throw std::logic_error("clique self-check failed after twin expansion");
  result.nodes_explored = solver.nodes();
  result.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.aborted = !complete;
  return result;
}

CliqueResult max_clique(const ConflictGraph& graph, const CliqueBudget& budget) {
  CliqueResult result;
  if (graph.kind == GraphKind::GcOnly && graph.adj.size() >= 2) {
    // GC-only conflict graphs are vertex-transitive: position permutations
    // and per-position A<->T / C<->G swaps preserve GC-content and Hamming
    // distance and can map any vertex to any other. Hence some maximum
    // clique contains vertex 0, and the search can restrict to its
    // neighborhood, which is both smaller and no longer transitive (so the
    // twin reduction starts to bite).
    const Clock::time_point start = Clock::now();
    std::vector<std::uint32_t> neighbors;
    for (std::size_t j = 0; j < graph.adj.size(); ++j)
      if (graph.adj.at(0, j)) neighbors.push_back(static_cast<std::uint32_t>(j));
    AdjacencyMatrix sub(neighbors.size());
    for (std::size_t a = 0; a < neighbors.size(); ++a)
      for (std::size_t b = a + 1; b < neighbors.size(); ++b)
        if (graph.adj.at(neighbors[a], neighbors[b])) sub.set(a, b);
    result = max_clique(sub, budget);
    for (std::uint32_t& v : result.vertices) v = neighbors[v];
    result.vertices.insert(result.vertices.begin(), 0);
    result.size += 1;
    for (std::size_t a = 0; a < result.vertices.size(); ++a)
      for (std::size_t b = a + 1; b < result.vertices.size(); ++b)
        if (!graph.adj.at(result.vertices[a], result.vertices[b]))
          throw std::logic_error("clique self-check failed after neighborhood peel");
    result.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
  } else {
    result = max_clique(graph.adj, budget);
  }
  result.sequences.reserve(result.vertices.size());
  for (const std::uint32_t v : result.vertices)
    result.sequences.push_back(graph.vertices[v]);
  return result;
}

CountResult count_max_cliques(const AdjacencyMatrix& adj,
                              std::optional<std::size_t> known_max,
                              const CliqueBudget& budget) {
  Solver solver(adj, budget);
  CountResult result;
  if (!solver.solve()) {
    result.max_size = solver.best_size();
    result.exhausted = false;
    result.nodes_explored = solver.nodes();
    return result;
  }
  if (known_max && *known_max != solver.best_size())
    raise(Errc::InvalidParams,
          "known_max " + std::to_string(*known_max) +
              " disagrees with computed maximum " + std::to_string(solver.best_size()));
  result.max_size = solver.best_size();
  result.exhausted = solver.count(result.max_size);
  result.count = solver.clique_count();
  result.nodes_explored = solver.nodes();
  return result;
}

CodeSet clique_to_code(const ConflictGraph& graph, const CliqueResult& result) {
  std::vector<Sequence> members;
  members.reserve(result.vertices.size());
  for (const std::uint32_t v : result.vertices) {
    if (v >= graph.vertices.size())
      raise(Errc::IndexOutOfRange, "clique vertex index " + std::to_string(v) +
                                       " outside graph with " +
                                       std::to_string(graph.vertices.size()) +
                                       " vertices");
    members.push_back(graph.vertices[v]);
  }
  return CodeSet(graph.params, std::move(members));
}

}  // namespace dnacodex
