#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wasc/bijections/wmatrix.hpp"
#include "wasc/matching.hpp"
#include "wasc/sequence.hpp"

namespace wasc {

// Preorder outdegree sequence (a_1, a_2[l_2], ..., a_n[l_n]) of a node-labeled
// plane tree. Requirements: a_1 + ... + a_i >= i, the a_i sum to n, the root
// (i = 1) and leaves (a_i = 0) carry no label, every other entry carries a
// label 0 <= l_i < a_i.
class AugmentedSequence {
 public:
  struct Entry {
    std::size_t outdegree = 0;
    std::optional<std::size_t> label;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  explicit AugmentedSequence(std::vector<Entry> entries) : entries_(std::move(entries)) {
    if (auto problem = violation(entries_)) throw DomainError("not an augmented sequence: " + *problem);
  }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }

  bool all_labels_zero() const {
    for (const Entry& e : entries_) {
      if (e.label && *e.label != 0) return false;
    }
    return true;
  }

  friend bool operator==(const AugmentedSequence&, const AugmentedSequence&) = default;

  static std::optional<std::string> violation(const std::vector<Entry>& entries) {
    if (entries.empty()) return "empty";
    std::size_t partial = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const Entry& e = entries[i];
      partial += e.outdegree;
      if (partial < i + 1) return "prefix sum below " + std::to_string(i + 1) + " at entry " + std::to_string(i + 1);
      const bool needs_label = i > 0 && e.outdegree > 0;
      if (needs_label != e.label.has_value()) {
        return (needs_label ? "missing label at entry " : "unexpected label at entry ") + std::to_string(i + 1);
      }
      if (e.label && *e.label >= e.outdegree) return "label out of range at entry " + std::to_string(i + 1);
    }
    if (partial != entries.size()) return "outdegrees sum to " + std::to_string(partial);
    return std::nullopt;
  }

 private:
  std::vector<Entry> entries_;
};

// "1,2[1],1[0],0", optionally wrapped in parentheses. An unlabeled inner
// entry with positive outdegree reads as label 0, and omitted trailing
// zeros are restored so that the outdegrees sum to the length.
inline AugmentedSequence parse_augmented(std::string_view text) {
  text = detail::trim(text);
  if (!text.empty() && text.front() == '(') text.remove_prefix(1);
  if (!text.empty() && text.back() == ')') text.remove_suffix(1);
  std::vector<AugmentedSequence::Entry> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view token = detail::trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    AugmentedSequence::Entry entry;
    const std::size_t bracket = token.find('[');
    if (bracket == std::string_view::npos) {
      entry.outdegree = detail::parse_letter(token);
    } else {
      if (token.back() != ']') throw ParseError("unterminated label in '" + std::string(token) + "'");
      entry.outdegree = detail::parse_letter(token.substr(0, bracket));
      entry.label = detail::parse_letter(token.substr(bracket + 1, token.size() - bracket - 2));
    }
    if (!entry.label && !entries.empty() && entry.outdegree > 0) entry.label = 0;
    entries.push_back(entry);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::size_t sum = 0;
  for (const auto& e : entries) sum += e.outdegree;
  while (entries.size() < sum) entries.push_back({0, std::nullopt});
  return AugmentedSequence(std::move(entries));
}

inline std::string format_augmented(const AugmentedSequence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i].outdegree);
    if (s[i].label) out += '[' + std::to_string(*s[i].label) + ']';
  }
  return out;
}

// Dyck path over H (horizontal), h (marked horizontal) and D (down) that
// never has more D than horizontal steps in any prefix and ends balanced.
class MarkedDyckPath {
 public:
  explicit MarkedDyckPath(std::string steps) : steps_(std::move(steps)) {
    long balance = 0;
    for (char c : steps_) {
      if (c == 'H' || c == 'h') {
        ++balance;
      } else if (c == 'D') {
        if (--balance < 0) throw DomainError("marked Dyck path dips below the diagonal");
      } else {
        throw ParseError("marked Dyck path steps must be H, h or D");
      }
    }
    if (balance != 0) throw DomainError("marked Dyck path is not balanced");
  }

  const std::string& steps() const noexcept { return steps_; }

  friend bool operator==(const MarkedDyckPath&, const MarkedDyckPath&) = default;

 private:
  std::string steps_;
};

// H^{a_1} D H^{a_2-l_2} h^{l_2} D ... H^{a_n-l_n} h^{l_n} D
inline MarkedDyckPath augmented_to_marked_path(const AugmentedSequence& s) {
  std::string steps;
  for (const auto& e : s.entries()) {
    const std::size_t marked = e.label.value_or(0);
    steps.append(e.outdegree - marked, 'H');
    steps.append(marked, 'h');
    steps += 'D';
  }
  return MarkedDyckPath(std::move(steps));
}

// Splits the path at its down steps; segment i gives a_i = #(H, h) and
// l_i = #h.
inline AugmentedSequence marked_path_to_augmented(const MarkedDyckPath& path) {
  std::vector<AugmentedSequence::Entry> entries;
  std::size_t horizontal = 0, marked = 0;
  bool seen_marked = false;
  for (char c : path.steps()) {
    if (c == 'H') {
      if (seen_marked) throw DomainError("H after h inside one segment");
      ++horizontal;
    } else if (c == 'h') {
      seen_marked = true;
      ++marked;
    } else {
      AugmentedSequence::Entry e;
      e.outdegree = horizontal + marked;
      if (!entries.empty() && e.outdegree > 0) e.label = marked;
      if (entries.empty() && marked > 0) throw DomainError("root segment cannot be marked");
      entries.push_back(e);
      horizontal = marked = 0;
      seen_marked = false;
    }
  }
  return AugmentedSequence(std::move(entries));
}

// Each H opens a new column with a 1 in the row of its height; the first h
// of a block adds a row-1 entry to the column of the preceding H, further
// h's open new columns with a single row-1 entry. The D closing an h-block
// does not count towards later heights.
inline WMatrix marked_path_to_wmatrix(const MarkedDyckPath& path) {
  std::vector<std::vector<std::size_t>> columns;
  std::size_t downs = 0, skipped = 0;
  char previous = 'D';
  for (char c : path.steps()) {
    if (c == 'H') {
      columns.push_back({downs - skipped + 1});
    } else if (c == 'h') {
      if (previous == 'H') {
        columns.back().push_back(1);
      } else if (previous == 'h') {
        columns.push_back({1});
      } else {
        throw DomainError("h must follow a horizontal step");
      }
    } else {
      if (previous == 'h') ++skipped;
      ++downs;
    }
    previous = c;
  }
  return WMatrix::from_columns(std::move(columns));
}

// Inverse of marked_path_to_wmatrix on matrices of 021 shape.
inline MarkedDyckPath wmatrix_to_marked_path(const WMatrix& m) {
  if (!is_wmat021_shape(m)) throw DomainError("matrix is not in the 021 image");
  std::string steps;
  std::size_t downs = 0, skipped = 0;
  bool positive_seen = false;
  bool in_marked_block = false;

  auto close_marked_block = [&] {
    if (!in_marked_block) return;
    steps += 'D';
    ++downs;
    ++skipped;
    in_marked_block = false;
  };
  auto horizontal_at = [&](std::size_t height) {
    close_marked_block();
    if (downs > height + skipped) throw DomainError("matrix heights cannot be realized by a Dyck path");
    steps.append(height + skipped - downs, 'D');
    downs = height + skipped;
    steps += 'H';
  };
  auto marked = [&] {
    steps += 'h';
    in_marked_block = true;
  };

  for (std::size_t c = 1; c <= m.dimension(); ++c) {
    const auto& rows = m.column(c);
    if (rows.back() > 1) {
      positive_seen = true;
      horizontal_at(rows.back() - 1);
      if (rows.front() == 1) marked();
    } else if (!positive_seen) {
      horizontal_at(0);
    } else {
      if (!in_marked_block) throw DomainError("row-1 column does not continue a marked block");
      marked();
    }
  }
  close_marked_block();
  const std::size_t n = m.count_ones();
  if (downs > n) throw DomainError("matrix heights exceed the path length");
  steps.append(n - downs, 'D');
  return MarkedDyckPath(std::move(steps));
}

inline WeakAscentSequence augmented_to_wasc021(const AugmentedSequence& s) {
  return wmat_to_wasc(marked_path_to_wmatrix(augmented_to_marked_path(s)));
}

inline AugmentedSequence wasc021_to_augmented(const WeakAscentSequence& w) {
  if (w.empty()) throw DomainError("aug021 is defined for non-empty sequences only");
  if (contains(w, Pattern{0, 2, 1})) throw DomainError("sequence contains 021");
  return marked_path_to_augmented(wmatrix_to_marked_path(wasc_to_wmat(w)));
}

// All augmented sequences of length n (n >= 1), outdegrees in lexicographic
// order, labels innermost.
template <typename Visit>
void for_each_augmented(std::size_t n, Visit&& visit) {
  std::vector<AugmentedSequence::Entry> entries;
  auto recurse = [&](auto& self, std::size_t partial) -> void {
    const std::size_t i = entries.size();  // 0-based position being filled
    if (i == n) {
      if (partial == n) visit(AugmentedSequence(entries));
      return;
    }
    // partial + a >= i + 1 and partial + a <= n
    const std::size_t lowest = partial >= i + 1 ? 0 : i + 1 - partial;
    for (std::size_t a = lowest; partial + a <= n; ++a) {
      if (i == 0 || a == 0) {
        entries.push_back({a, std::nullopt});
        self(self, partial + a);
        entries.pop_back();
        continue;
      }
      for (std::size_t label = 0; label < a; ++label) {
        entries.push_back({a, label});
        self(self, partial + a);
        entries.pop_back();
      }
    }
  };
  if (n >= 1) recurse(recurse, 0);
}

}  // namespace wasc
