#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "wasc/big.hpp"
#include "wasc/sequence.hpp"

namespace wasc {

namespace detail {

// Backtracking search for subsequences of `word` order-isomorphic to
// `pattern`. Pattern letters are bound to word values; a binding is kept
// only while it is strictly monotone in the letter (equal letters share a
// value, distinct letters get distinct values in the same order).
class OccurrenceSearch {
 public:
  OccurrenceSearch(std::span<const Letter> word, const Pattern& pattern)
      : word_(word),
        pattern_(pattern.view()),
        value_(pattern.alphabet_size(), 0),
        uses_(pattern.alphabet_size(), 0) {}

  bool any() { return word_.size() >= pattern_.size() && find(0, 0); }

  // Occurrences whose final letter sits on the last position of the word.
  bool any_ending_at_last() {
    if (word_.size() < pattern_.size()) return false;
    const std::size_t k = pattern_.size();
    const std::size_t last = word_.size() - 1;
    bind(pattern_[k - 1], word_[last]);
    bool found = find_prefix(0, 0, k - 1, last);
    unbind(pattern_[k - 1]);
    return found;
  }

  std::uint64_t count() { return word_.size() >= pattern_.size() ? count_from(0, 0) : 0; }

 private:
  bool compatible(Letter letter, Letter value) const {
    if (uses_[letter]) return value_[letter] == value;
    for (std::size_t other = 0; other < value_.size(); ++other) {
      if (!uses_[other]) continue;
      const Letter bound = value_[other];
      if (other < letter ? !(bound < value) : !(bound > value)) return false;
    }
    return true;
  }

  void bind(Letter letter, Letter value) {
    value_[letter] = value;
    ++uses_[letter];
  }
  void unbind(Letter letter) { --uses_[letter]; }

  bool find(std::size_t t, std::size_t from) { return find_prefix(t, from, pattern_.size(), word_.size()); }

  // Matches pattern_[t..stop) into word_[from..limit).
  bool find_prefix(std::size_t t, std::size_t from, std::size_t stop, std::size_t limit) {
    if (t == stop) return true;
    const std::size_t remaining = stop - t;
    for (std::size_t i = from; i + remaining <= limit; ++i) {
      const Letter letter = pattern_[t];
      if (!compatible(letter, word_[i])) continue;
      bind(letter, word_[i]);
      bool found = find_prefix(t + 1, i + 1, stop, limit);
      unbind(letter);
      if (found) return true;
    }
    return false;
  }

  std::uint64_t count_from(std::size_t t, std::size_t from) {
    if (t == pattern_.size()) return 1;
    const std::size_t remaining = pattern_.size() - t;
    std::uint64_t total = 0;
    for (std::size_t i = from; i + remaining <= word_.size(); ++i) {
      const Letter letter = pattern_[t];
      if (!compatible(letter, word_[i])) continue;
      bind(letter, word_[i]);
      total += count_from(t + 1, i + 1);
      unbind(letter);
    }
    return total;
  }

  std::span<const Letter> word_;
  std::span<const Letter> pattern_;
  std::vector<Letter> value_;
  std::vector<std::uint32_t> uses_;
};

}  // namespace detail

inline bool contains(std::span<const Letter> word, const Pattern& p) {
  return detail::OccurrenceSearch(word, p).any();
}

inline bool contains(const WeakAscentSequence& w, const Pattern& p) { return contains(w.view(), p); }

inline bool avoids(const WeakAscentSequence& w, const Pattern& p) { return !contains(w, p); }

// True iff some occurrence of p uses the last letter of `word`. When the
// word minus its last letter avoids p, this decides containment of the
// whole word.
inline bool has_occurrence_ending_at_last(std::span<const Letter> word, const Pattern& p) {
  return detail::OccurrenceSearch(word, p).any_ending_at_last();
}

inline BigCount count_occurrences(std::span<const Letter> word, const Pattern& p) {
  return detail::OccurrenceSearch(word, p).count();
}

inline BigCount count_occurrences(const WeakAscentSequence& w, const Pattern& p) {
  return count_occurrences(w.view(), p);
}

// Linear-time avoidance tests for three length-3 patterns, valid on weak
// ascent sequences (they rely on the leading 0).
enum class FastPattern { p011, p012, p021 };

inline Pattern to_pattern(FastPattern which) {
  switch (which) {
    case FastPattern::p011: return Pattern{0, 1, 1};
    case FastPattern::p012: return Pattern{0, 1, 2};
    case FastPattern::p021: return Pattern{0, 2, 1};
  }
  throw std::logic_error("unknown fast pattern");
}

inline bool fast_avoids(const WeakAscentSequence& w, FastPattern which) {
  switch (which) {
    case FastPattern::p011: {
      // every positive value occurs at most once
      std::vector<bool> seen(w.size() + 1, false);
      for (Letter a : w) {
        if (a == 0) continue;
        if (seen[a]) return false;
        seen[a] = true;
      }
      return true;
    }
    case FastPattern::p012:
    case FastPattern::p021: {
      // positive letters weakly decreasing (012) or weakly increasing (021)
      const bool decreasing = which == FastPattern::p012;
      Letter previous = 0;
      for (Letter a : w) {
        if (a == 0) continue;
        if (previous != 0 && (decreasing ? a > previous : a < previous)) return false;
        previous = a;
      }
      return true;
    }
  }
  throw std::logic_error("unknown fast pattern");
}

}  // namespace wasc
