#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "wasc/big.hpp"
#include "wasc/enumerate.hpp"
#include "wasc/sequence.hpp"

namespace wasc {

// One-line notation over 1..n.
class Permutation {
 public:
  using Value = std::uint32_t;

  explicit Permutation(std::vector<Value> values) : values_(std::move(values)) {
    std::vector<bool> seen(values_.size() + 1, false);
    for (Value v : values_) {
      if (v < 1 || v > values_.size() || seen[v]) throw DomainError("not a permutation of 1..n");
      seen[v] = true;
    }
  }
  Permutation(std::initializer_list<Value> values) : Permutation(std::vector<Value>(values)) {}

  static Permutation identity(std::size_t n) {
    std::vector<Value> values(n);
    std::iota(values.begin(), values.end(), Value{1});
    return Permutation(std::move(values));
  }

  const std::vector<Value>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  Value operator[](std::size_t i) const { return values_[i]; }

  // Lexicographic successor; false after the last permutation.
  bool advance() { return std::next_permutation(values_.begin(), values_.end()); }

 private:
  std::vector<Value> values_;
};

inline Permutation parse_permutation(std::string_view text) {
  Word word = parse_word(text);
  return Permutation(std::vector<Permutation::Value>(word.begin(), word.end()));
}

namespace detail {

// For each adjacent descent (j, j+1) the "2" and "3" must lie strictly
// between pi[j+1] and pi[j] in value; the smallest eligible "2" to the left
// has to be below the largest eligible "3" to the right.
inline bool contains_2_41_3(std::span<const Permutation::Value> pi) {
  const std::size_t n = pi.size();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const auto high = pi[j], low = pi[j + 1];
    if (high < low) continue;
    Permutation::Value min_left = high;
    for (std::size_t i = 0; i < j; ++i) {
      if (pi[i] > low && pi[i] < min_left) min_left = pi[i];
    }
    if (min_left == high) continue;
    for (std::size_t k = j + 2; k < n; ++k) {
      if (pi[k] > min_left && pi[k] < high) return true;
    }
  }
  return false;
}

}  // namespace detail

// Positions i < j < j+1 < k with pi_{j+1} < pi_i < pi_k < pi_j.
inline bool contains_2_41_3(const Permutation& pi) { return detail::contains_2_41_3(pi.values()); }

// Permutations of 1..n avoiding 2-41-3, by exhaustive generation. With
// several threads the work is sharded by first letter.
inline BigCount count_avoiding_permutations(std::size_t n, unsigned threads = 1) {
  if (n == 0) return 1;
  auto count_with_first = [n](Permutation::Value first) {
    std::vector<Permutation::Value> values(n);
    values[0] = first;
    std::size_t k = 1;
    for (Permutation::Value v = 1; v <= n; ++v) {
      if (v != first) values[k++] = v;
    }
    std::uint64_t avoiders = 0;
    do {
      if (!detail::contains_2_41_3(values)) ++avoiders;
    } while (std::next_permutation(values.begin() + 1, values.end()));
    return avoiders;
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<std::uint64_t> per_first(n + 1, 0);
  std::atomic<Permutation::Value> next{1};
  std::vector<std::thread> pool;
  auto work = [&] {
    for (Permutation::Value first = next++; first <= n; first = next++) per_first[first] = count_with_first(first);
  };
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& worker : pool) worker.join();

  BigCount total = 0;
  for (std::uint64_t c : per_first) total += c;
  return total;
}

struct ConjectureRow {
  std::size_t n = 0;
  BigCount sequences;     // w_210(n)
  BigCount permutations;  // 2-41-3 avoiders of length n
  bool equal = false;
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;

  // Largest n such that all rows up to n agree (0 if the first row differs).
  std::size_t consistent_up_to() const {
    std::size_t n = 0;
    for (const auto& row : rows) {
      if (!row.equal) break;
      n = row.n;
    }
    return n;
  }

  bool all_equal() const { return !rows.empty() && consistent_up_to() == rows.back().n; }

  // Evidence only: agreement on a finite range never proves the identity.
  std::string verdict() const {
    if (all_equal()) return "consistent up to n = " + std::to_string(rows.back().n);
    for (const auto& row : rows) {
      if (!row.equal) return "inconsistent at n = " + std::to_string(row.n);
    }
    return "no data";
  }
};

inline ConjectureReport conjecture_report(std::size_t n_max, unsigned threads = 1) {
  ConjectureReport report;
  const Pattern p210{2, 1, 0};
  for (std::size_t n = 1; n <= n_max; ++n) {
    ConjectureRow row;
    row.n = n;
    row.sequences = count_avoiders(n, p210, {threads});
    row.permutations = count_avoiding_permutations(n, threads);
    row.equal = row.sequences == row.permutations;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace wasc
