#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "wasc/big.hpp"
#include "wasc/matching.hpp"
#include "wasc/sequence.hpp"

namespace wasc {

namespace detail {

// Depth-first walk of the generating tree of weak ascent sequences. Children
// of a prefix are its extensions by 0, 1, ..., wasc(prefix) + 1 in that
// order, so leaves come out in lexicographic order. A prefix that already
// contains the pattern is never extended: containment survives appending.
class TreeWalk {
 public:
  TreeWalk(std::size_t length, const std::optional<Pattern>& avoid) : length_(length), avoid_(avoid) {
    prefix_.reserve(length);
  }

  template <typename Visit>
  void visit_all(Visit&& visit) {
    if (length_ == 0) {
      visit(std::span<const Letter>(prefix_));
      return;
    }
    descend_with(0, 0, visit);
  }

  std::uint64_t count_all() {
    std::uint64_t total = 0;
    visit_all([&](std::span<const Letter>) { ++total; });
    return total;
  }

  // Avoiding prefixes of exactly `depth` letters (depth <= length), in order.
  std::vector<Word> prefixes(std::size_t depth) {
    std::vector<Word> out;
    TreeWalk shallow(depth, avoid_);
    shallow.visit_all([&](std::span<const Letter> p) { out.emplace_back(p.begin(), p.end()); });
    return out;
  }

  // Counts completions of an avoiding prefix to the full length.
  std::uint64_t count_below(const Word& start) {
    prefix_ = start;
    std::uint64_t total = 0;
    auto tally = [&](std::span<const Letter>) { ++total; };
    if (prefix_.size() == length_) return 1;
    expand(wasc(prefix_), tally);
    return total;
  }

 private:
  template <typename Visit>
  void descend_with(Letter letter, std::size_t ascents, Visit& visit) {
    prefix_.push_back(letter);
    if (!avoid_ || !has_occurrence_ending_at_last(prefix_, *avoid_)) {
      if (prefix_.size() == length_) {
        visit(std::span<const Letter>(prefix_));
      } else {
        expand(ascents, visit);
      }
    }
    prefix_.pop_back();
  }

  template <typename Visit>
  void expand(std::size_t ascents, Visit& visit) {
    const Letter last = prefix_.back();
    for (Letter a = 0; a <= ascents + 1; ++a) {
      descend_with(a, ascents + (last <= a ? 1 : 0), visit);
    }
  }

  std::size_t length_;
  std::optional<Pattern> avoid_;
  Word prefix_;
};

}  // namespace detail

// Calls `visit(const WeakAscentSequence&)` for every member of W_n, or of
// W_n(avoid), in lexicographic order.
template <typename Visit>
void for_each_sequence(std::size_t n, const std::optional<Pattern>& avoid, Visit&& visit) {
  detail::TreeWalk walk(n, avoid);
  walk.visit_all([&](std::span<const Letter> letters) {
    visit(unchecked_sequence(Word(letters.begin(), letters.end())));
  });
}

template <typename Visit>
void for_each_sequence(std::size_t n, Visit&& visit) {
  for_each_sequence(n, std::nullopt, std::forward<Visit>(visit));
}

inline std::vector<WeakAscentSequence> enumerate(std::size_t n, const std::optional<Pattern>& avoid = std::nullopt) {
  std::vector<WeakAscentSequence> out;
  for_each_sequence(n, avoid, [&](const WeakAscentSequence& w) { out.push_back(w); });
  return out;
}

struct CountOptions {
  unsigned threads = 1;
  // Depth at which the tree is cut into independent jobs when threads > 1.
  std::size_t split_depth = 6;
};

// |W_n(avoid)| (or |W_n|) by pruned depth-first search. The multi-threaded
// path sums per-prefix counts, so the result does not depend on `threads`.
inline BigCount count_avoiders(std::size_t n, const std::optional<Pattern>& avoid = std::nullopt,
                               CountOptions options = {}) {
  detail::TreeWalk walk(n, avoid);
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || n <= options.split_depth) return walk.count_all();

  const std::vector<Word> jobs = walk.prefixes(options.split_depth);
  std::atomic<std::size_t> next{0};
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      detail::TreeWalk local(n, avoid);
      for (std::size_t job = next++; job < jobs.size(); job = next++) {
        partial[t] += local.count_below(jobs[job]);
      }
    });
  }
  for (auto& worker : pool) worker.join();
  BigCount total = 0;
  for (std::uint64_t c : partial) total += c;
  return total;
}

}  // namespace wasc
