#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "wasc/matching.hpp"
#include "wasc/sequence.hpp"

namespace wasc {

// One block per zero of the source sequence, left to right.
using FollowerPartition = std::vector<std::set<Letter>>;

// A position j is a candidate when j is the first position or
// w_{j-1} <= w_j; its follower q(w_j) = wasc(w_1..w_j) + 1 is the value newly
// allowed at position j+1. Each zero starts a chain value -> follower,
// continued while the follower value occurs at a candidate position.
inline FollowerPartition follower_partition(const WeakAscentSequence& w) {
  if (w.empty()) throw DomainError("followers011 is defined for non-empty sequences only");
  if (!fast_avoids(w, FastPattern::p011)) throw DomainError("sequence contains 011");

  const std::size_t n = w.size();
  // follower[j] for candidate positions, 0 otherwise (followers are >= 1)
  std::vector<Letter> follower(n, 0);
  std::size_t ascents = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j > 0 && w[j - 1] <= w[j]) ++ascents;
    if (j == 0 || w[j - 1] <= w[j]) follower[j] = static_cast<Letter>(ascents + 1);
  }
  // positive values occur at most once
  std::vector<std::size_t> position_of(n + 2, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (w[j] > 0) position_of[w[j]] = j;
  }

  FollowerPartition blocks;
  for (std::size_t j = 0; j < n; ++j) {
    if (w[j] != 0) continue;
    std::set<Letter> block;
    std::size_t at = j;
    while (follower[at] != 0) {
      const Letter next = follower[at];
      block.insert(next);
      if (next >= position_of.size() || position_of[next] == n) break;
      at = position_of[next];
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

inline std::string format_partition(const FollowerPartition& blocks) {
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += ' ';
    out += '{';
    bool first = true;
    for (Letter v : blocks[b]) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
    out += '}';
  }
  return out;
}

}  // namespace wasc
