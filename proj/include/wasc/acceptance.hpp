#pragma once

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wasc/big.hpp"
#include "wasc/bijections/aug021.hpp"
#include "wasc/bijections/bits001.hpp"
#include "wasc/bijections/followers011.hpp"
#include "wasc/bijections/ops012.hpp"
#include "wasc/bijections/wmatrix.hpp"
#include "wasc/counting.hpp"
#include "wasc/enumerate.hpp"
#include "wasc/matching.hpp"
#include "wasc/permutations.hpp"
#include "wasc/tables.hpp"

// End-to-end checks of every counting, bijection and search component.
// Each criterion reports pass/fail plus a short detail; all comparisons are
// exact integer equalities.
namespace wasc::acceptance {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

struct Result {
  int id;
  std::string title;
  bool passed;
  double seconds;
  double budget_seconds;
  std::string detail;
};

struct Options {
  unsigned threads = 1;
  // Also run the 10! permutation count for the w_210 comparison.
  bool conjecture_stretch = true;
};

namespace detail {

// Records the first few mismatches and counts checks.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) messages_ << (failures_ > 1 ? "; " : "") << what;
  }

  Outcome outcome(const std::string& summary) const {
    std::ostringstream detail;
    if (failures_ == 0) {
      detail << summary << " (" << checks_ << " checks)";
    } else {
      detail << failures_ << " of " << checks_ << " checks failed: " << messages_.str();
    }
    return {failures_ == 0, detail.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream messages_;
};

inline std::string words(const std::string& a, const std::string& b) { return a + " vs " + b; }

inline Outcome reproduce_rows(const auto& rows, const Options& options) {
  Checker check;
  for (const auto& row : rows) {
    const Pattern p = parse_pattern(row.pattern);
    for (std::size_t n = 1; n <= row.counts.size(); ++n) {
      const BigCount got = count_avoiders(n, p, {options.threads});
      check.expect(got == row.counts[n - 1], std::string(row.pattern) + " n=" + std::to_string(n) + ": " +
                                                 words(got.str(), std::to_string(row.counts[n - 1])));
    }
  }
  return check.outcome("all rows match for n = 1..10");
}

inline Outcome triple_agreement(const Options& options) {
  Checker check;
  for (SolvedPattern p : kSolvedPatterns) {
    const std::string label(name(p));
    const PowerSeries series = series_for_pattern(p, 30);
    const std::vector<BigCount> coeffs = series.integer_coefficients();
    check.expect(coeffs[0] == 1, label + " constant term");
    for (std::int64_t n = 1; n <= 30; ++n) {
      const BigCount formula = formula_count(p, n);
      check.expect(formula == coeffs[n], label + " n=" + std::to_string(n) + " formula/series: " +
                                             words(formula.str(), coeffs[n].str()));
      if (n <= 10) {
        const BigCount brute = count_avoiders(static_cast<std::size_t>(n), to_pattern(p), {options.threads});
        check.expect(brute == formula, label + " n=" + std::to_string(n) + " brute/formula: " +
                                           words(brute.str(), formula.str()));
      }
    }
  }
  return check.outcome("formula = series = enumeration for n <= 10, formula = series for n <= 30");
}

inline Outcome fixpoint_residuals() {
  Checker check;
  constexpr std::size_t order = 30;
  const PowerSeries one = PowerSeries::constant(order, 1);
  {
    const PowerSeries f = solve_fixpoint(FunctionalEquation::EQ102, order);
    const PowerSeries residual = f - one - PowerSeries(order, {0, 1, -1}) * (f * f * f);
    check.expect(residual.is_zero(), "EQ102 residual is nonzero");
  }
  {
    const PowerSeries f = solve_fixpoint(FunctionalEquation::EQ021, order);
    const PowerSeries xf = f.shifted(1);
    const PowerSeries residual = f - one - xf / (one - xf * f);
    check.expect(residual.is_zero(), "EQ021 residual is nonzero");
  }
  return check.outcome("both residuals vanish mod x^31");
}

inline std::vector<Composition12> compositions_of(unsigned total) {
  std::vector<Composition12> out;
  Composition12 current;
  auto recurse = [&](auto& self, unsigned left) -> void {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (std::uint8_t part : {std::uint8_t{1}, std::uint8_t{2}}) {
      if (part > left) continue;
      current.push_back(part);
      self(self, left - part);
      current.pop_back();
    }
  };
  recurse(recurse, total);
  return out;
}

inline Outcome bijection_roundtrips(const Options& options) {
  Checker check;
  const Pattern p001{0, 0, 1}, p012{0, 1, 2}, p021{0, 2, 1};
  std::ostringstream summary;

  for (std::size_t n = 1; n <= 12; ++n) {
    std::set<WeakAscentSequence> image;
    const std::size_t items = std::size_t{1} << (n - 1);
    for (std::size_t code = 0; code < items; ++code) {
      BitSequence bits(n - 1);
      for (std::size_t i = 0; i + 1 < n; ++i) bits[i] = static_cast<std::uint8_t>((code >> i) & 1u);
      const WeakAscentSequence w = bits_to_wasc001(bits);
      check.expect(w.size() == n && !contains(w, p001), "bits001 image " + to_string(w) + " invalid");
      check.expect(wasc001_to_bits(w) == bits, "bits001 roundtrip failed for " + format_bits(bits));
      image.insert(w);
    }
    const BigCount avoiders = count_avoiders(n, p001, {options.threads});
    check.expect(avoiders == image.size() && avoiders == formula_count(SolvedPattern::p001, n),
                 "bits001 image size at n=" + std::to_string(n));
    for_each_sequence(n, p001, [&](const WeakAscentSequence& w) {
      check.expect(bits_to_wasc001(wasc001_to_bits(w)) == w, "bits001 inverse roundtrip failed for " + to_string(w));
    });
  }
  summary << "bits001 n<=12";

  for (std::size_t n = 1; n <= 12; ++n) {
    std::set<WeakAscentSequence> image;
    const auto compositions = compositions_of(static_cast<unsigned>(2 * (n - 1)));
    for (const Composition12& c : compositions) {
      const OperationSequence ops = composition_to_ops(c);
      const WeakAscentSequence w = apply_ops(ops);
      check.expect(w.size() == n && !contains(w, p012), "ops012 image " + to_string(w) + " invalid");
      const OperationSequence back = wasc012_to_ops(w);
      check.expect(back == ops && ops_to_composition(back) == c,
                   "comp012 roundtrip failed for " + format_composition(c));
      image.insert(w);
    }
    const BigCount avoiders = count_avoiders(n, p012, {options.threads});
    check.expect(avoiders == image.size() && avoiders == compositions.size() &&
                     avoiders == fibonacci(2 * n - 1),
                 "comp012 image size at n=" + std::to_string(n));
    for_each_sequence(n, p012, [&](const WeakAscentSequence& w) {
      const OperationSequence ops = wasc012_to_ops(w);
      check.expect(apply_ops(composition_to_ops(ops_to_composition(ops))) == w,
                   "ops012 inverse roundtrip failed for " + to_string(w));
    });
  }
  summary << ", comp012 n<=12";

  for (std::size_t n = 1; n <= 9; ++n) {
    std::set<WeakAscentSequence> image;
    std::size_t items = 0;
    for_each_augmented(n, [&](const AugmentedSequence& s) {
      ++items;
      const WeakAscentSequence w = augmented_to_wasc021(s);
      check.expect(w.size() == n && !contains(w, p021), "aug021 image " + to_string(w) + " invalid");
      check.expect(wasc021_to_augmented(w) == s, "aug021 roundtrip failed for " + format_augmented(s));
      image.insert(w);
    });
    const BigCount avoiders = count_avoiders(n, p021, {options.threads});
    check.expect(avoiders == image.size() && avoiders == items && avoiders == formula_count(SolvedPattern::p021, n),
                 "aug021 image size at n=" + std::to_string(n));
    for_each_sequence(n, p021, [&](const WeakAscentSequence& w) {
      check.expect(augmented_to_wasc021(wasc021_to_augmented(w)) == w,
                   "aug021 inverse roundtrip failed for " + to_string(w));
    });
  }
  summary << ", aug021 n<=9";

  for (std::size_t n = 1; n <= 9; ++n) {
    std::size_t sequences = 0;
    for_each_sequence(n, [&](const WeakAscentSequence& w) {
      ++sequences;
      const WMatrix m = wasc_to_wmat(w);
      check.expect(m.count_ones() == n && wmat_to_wasc(m) == w, "wmat roundtrip failed for " + to_string(w));
    });
    std::set<WeakAscentSequence> image;
    std::size_t matrices = 0;
    for_each_wmatrix(n, [&](const WMatrix& m) {
      ++matrices;
      const WeakAscentSequence w = wmat_to_wasc(m);
      check.expect(wasc_to_wmat(w) == m, "wmat inverse roundtrip failed for " + to_string(w));
      image.insert(w);
    });
    check.expect(matrices == sequences && image.size() == sequences,
                 "|WMat_" + std::to_string(n) + "| = " + std::to_string(matrices) + " vs |W_n| = " +
                     std::to_string(sequences));
  }
  summary << ", wmat n<=9";
  return check.outcome(summary.str());
}

inline Outcome structural_characterizations() {
  Checker check;
  const Pattern p011{0, 1, 1}, p021{0, 2, 1};
  for (std::size_t n = 1; n <= 10; ++n) {
    for_each_sequence(n, [&](const WeakAscentSequence& w) {
      for (FastPattern which : {FastPattern::p011, FastPattern::p012, FastPattern::p021}) {
        check.expect(fast_avoids(w, which) == !contains(w, to_pattern(which)),
                     "fast_avoids disagrees on " + to_string(w) + " / " + to_string(to_pattern(which)));
      }
      if (n <= 9) {
        const WMatrix m = wasc_to_wmat(w);
        check.expect(is_wmat021_shape(m) == !contains(w, p021), "021 shape disagrees on " + to_string(w));
        check.expect(has_wmat011_rows(m) == !contains(w, p011), "011 rows disagree on " + to_string(w));
      }
    });
  }
  return check.outcome("fast tests on W_n (n<=10), matrix shapes on W_n (n<=9)");
}

inline Outcome catalan_subfamily() {
  Checker check;
  const Pattern p021{0, 2, 1};
  for (std::size_t n = 1; n <= 8; ++n) {
    std::size_t unlabeled = 0;
    for_each_augmented(n, [&](const AugmentedSequence& s) {
      if (!s.all_labels_zero()) return;
      ++unlabeled;
      check.expect(!contains(augmented_to_wasc021(s), p021), "image of " + format_augmented(s) + " contains 021");
    });
    check.expect(catalan(static_cast<std::int64_t>(n)) == unlabeled,
                 "n=" + std::to_string(n) + ": " + std::to_string(unlabeled) + " all-zero-label sequences");
  }
  return check.outcome("C_1..C_8 all-zero-label sequences, C_8 = 1430");
}

inline Outcome b_recurrence() {
  Checker check;
  const BTable table = b_table(25);
  for (std::size_t n = 1; n <= 25; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      check.expect(table(n, m) == triangular_binomial(n, m), "B(" + std::to_string(n) + "," + std::to_string(m) + ")");
    }
    check.expect(table.row_sum(n) == formula_count(SolvedPattern::p011, n), "row sum " + std::to_string(n));
  }
  check.expect(table.row_sum(10) == 32869, "w_011(10) = 32869");
  return check.outcome("B(n,m) = triangular binomial for m <= n <= 25");
}

inline Outcome succession_engine() {
  Checker check;
  const std::vector<BigCount> levels = succession_level_counts(20);
  for (std::size_t n = 1; n <= 20; ++n) {
    check.expect(levels[n - 1] == power_of_two(static_cast<unsigned>(n - 1)), "level " + std::to_string(n));
  }
  const std::uint64_t first_levels[] = {1, 2, 4, 8};
  for (std::size_t n = 1; n <= 4; ++n) check.expect(levels[n - 1] == first_levels[n - 1], "small level " + std::to_string(n));
  return check.outcome("levels 1..20 equal 2^(n-1)");
}

inline Outcome conjecture_check(const Options& options) {
  Checker check;
  const ConjectureReport report = conjecture_report(9, options.threads);
  for (const auto& row : report.rows) {
    check.expect(row.equal, "n=" + std::to_string(row.n) + ": " + words(row.sequences.str(), row.permutations.str()));
  }
  check.expect(report.rows.back().sequences == 112657, "w_210(9) = 112657");
  const std::string verdict = report.verdict();
  check.expect(verdict.find("consistent") == 0 && verdict.find("proved") == std::string::npos, "verdict wording");

  std::string summary = verdict;
  if (options.conjecture_stretch) {
    const BigCount perms = count_avoiding_permutations(10, options.threads);
    const BigCount seqs = count_avoiders(10, Pattern{2, 1, 0}, {options.threads});
    summary += "; stretch n = 10: " + seqs.str() + " vs " + perms.str() + (perms == seqs ? " (consistent)" : " (differs)");
  }
  return check.outcome(summary);
}

// The partition alone is checked for injectivity; the first colliding pair
// (if any) is reported.
inline Outcome follower_partitions() {
  Checker check;
  const Pattern p011{0, 1, 1};
  for (std::size_t n = 1; n <= 10; ++n) {
    std::map<FollowerPartition, WeakAscentSequence> first_source;
    std::size_t collisions = 0;
    std::string example;
    for_each_sequence(n, p011, [&](const WeakAscentSequence& w) {
      const FollowerPartition blocks = follower_partition(w);
      std::set<Letter> all;
      std::size_t total = 0;
      for (const auto& block : blocks) {
        total += block.size();
        all.insert(block.begin(), block.end());
      }
      const std::size_t top = w.weak_ascents() + 1;
      const bool exact_cover = total == all.size() && all.size() == top && *all.begin() == 1 && *all.rbegin() == top;
      check.expect(exact_cover, "partition of " + to_string(w) + " is not {1.." + std::to_string(top) + "}");
      check.expect(blocks.size() == static_cast<std::size_t>(std::count(w.begin(), w.end(), 0)),
                   "block count of " + to_string(w));
      auto [it, inserted] = first_source.emplace(blocks, w);
      if (!inserted && collisions++ == 0) {
        example = to_string(it->second) + " and " + to_string(w) + " both give " + format_partition(blocks);
      }
    });
    check.expect(collisions == 0, "not injective at n=" + std::to_string(n) + " (" + std::to_string(collisions) +
                                      " collisions, e.g. " + example + ")");
  }
  return check.outcome("disjoint exact covers, injective for n <= 10");
}

}  // namespace detail

inline std::vector<Criterion> criteria(const Options& options = {}) {
  using namespace detail;
  return {
      {1, "Solved-pattern counts", 60, [=] { return reproduce_rows(reference::kSolvedRows, options); }},
      {2, "Open-pattern counts", 120, [=] { return reproduce_rows(reference::kOpenRows, options); }},
      {3, "Triple agreement", 10, [=] { return triple_agreement(options); }},
      {4, "Functional-equation residuals", 1, [] { return fixpoint_residuals(); }},
      {5, "Bijection roundtrips", 120, [=] { return bijection_roundtrips(options); }},
      {6, "Structural characterizations", 120, [] { return structural_characterizations(); }},
      {7, "Catalan subfamily", 5, [] { return catalan_subfamily(); }},
      {8, "B-recurrence", 1, [] { return b_recurrence(); }},
      {9, "Succession-rule engine", 1, [] { return succession_engine(); }},
      {10, "Conjecture check (w_210 vs 2-41-3)", 600, [=] { return conjecture_check(options); }},
      {11, "Follower partition", 30, [] { return follower_partitions(); }},
  };
}

inline Result run(const Criterion& criterion) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = criterion.run();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Result result{criterion.id, criterion.title, outcome.passed, seconds, criterion.budget_seconds, outcome.detail};
  if (seconds >= criterion.budget_seconds) {
    result.passed = false;
    result.detail += "; over the time budget";
  }
  return result;
}

inline std::string format_result(const Result& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", r.seconds, r.budget_seconds);
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + ". " + r.title + " (" + timing +
         "): " + r.detail;
}

// Runs every criterion, printing one line each; true iff all passed.
inline bool run_all(std::ostream& out, const Options& options = {}) {
  bool all = true;
  for (const Criterion& c : criteria(options)) {
    const Result r = run(c);
    out << format_result(r) << '\n' << std::flush;
    all = all && r.passed;
  }
  out << (all ? "all acceptance criteria passed" : "acceptance criteria FAILED") << '\n';
  return all;
}

}  // namespace wasc::acceptance
