#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "wasc/wasc.hpp"

using namespace wasc;

TEST(BigHelpers, BinomialAndCatalan) {
  for (unsigned n = 0; n <= 30; ++n) {
    for (unsigned k = 0; k <= n + 1; ++k) EXPECT_EQ(binomial(n, k), oracle::binomial(n, k)) << n << " " << k;
    EXPECT_EQ(catalan(n), oracle::catalan(n));
  }
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(power_of_two(100).str(), "1267650600228229401496703205376");
}

TEST(Fibonacci, OddIndexedValues) {
  for (unsigned k = 1; k <= 80; ++k) EXPECT_EQ(fibonacci(k), oracle::fibonacci(k)) << k;
  EXPECT_THROW(fibonacci(0), std::invalid_argument);
}

TEST(PowerSeriesArithmetic, ProductAndQuotient) {
  const std::size_t N = 12;
  const PowerSeries one_minus_x(N, {1, -1});
  const PowerSeries geometric = PowerSeries::constant(N, 1) / one_minus_x;
  for (std::size_t i = 0; i <= N; ++i) EXPECT_EQ(geometric[i], 1);
  EXPECT_EQ(geometric * one_minus_x, PowerSeries::constant(N, 1));
  const PowerSeries square = geometric * geometric;
  for (std::size_t i = 0; i <= N; ++i) EXPECT_EQ(square[i], static_cast<int>(i + 1));
  EXPECT_THROW(PowerSeries::constant(N, 1) / PowerSeries::monomial(N, 1), std::domain_error);
  EXPECT_THROW(PowerSeries(3) + PowerSeries(4), std::invalid_argument);
  EXPECT_EQ(PowerSeries::monomial(4, 1).shifted(2), PowerSeries::monomial(4, 3));
  EXPECT_TRUE(PowerSeries::monomial(4, 2).shifted(3).is_zero());
}

TEST(PowerSeriesArithmetic, FractionalCoefficientsAreRejectedAsCounts) {
  PowerSeries half = PowerSeries::constant(3, Rational(1, 2));
  EXPECT_THROW(half.integer_coefficients(), std::logic_error);
}

TEST(FormulaCount, MatchesBruteForce) {
  for (SolvedPattern p : kSolvedPatterns) {
    const Pattern pattern = to_pattern(p);
    for (std::int64_t n = 1; n <= 7; ++n) {
      EXPECT_EQ(formula_count(p, n), oracle::count_avoiders(static_cast<std::size_t>(n), pattern.letters()))
          << name(p) << " n=" << n;
    }
  }
}

TEST(FormulaCount, ReferenceRows) {
  for (const auto& row : reference::kSolvedRows) {
    const auto p = solved_pattern(parse_pattern(row.pattern));
    ASSERT_TRUE(p.has_value());
    for (std::int64_t n = 1; n <= 10; ++n) EXPECT_EQ(formula_count(*p, n), row.counts[n - 1]) << row.pattern;
  }
  EXPECT_EQ(formula_count(SolvedPattern::p021, 10), 114236);
  EXPECT_EQ(formula_count(SolvedPattern::p102, 10), 171831);
  EXPECT_THROW(formula_count(SolvedPattern::p001, 0), std::invalid_argument);
}

TEST(FormulaCount, RationalSumsAreIntegralUpTo200) {
  for (std::int64_t n = 1; n <= 200; ++n) {
    EXPECT_NO_THROW(formula_count(SolvedPattern::p102, n)) << n;
    EXPECT_NO_THROW(formula_count(SolvedPattern::p021, n)) << n;
  }
}

TEST(FormulaCount, SingleSumFor021DivergesAtSeven) {
  for (std::int64_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(single_sum_021(n), Rational(formula_count(SolvedPattern::p021, n))) << n;
  }
  EXPECT_EQ(single_sum_021(7), 1348);
  EXPECT_EQ(formula_count(SolvedPattern::p021, 7), 1347);
  EXPECT_EQ(count_avoiders(7, parse_pattern("021")), 1347);
}

TEST(Series, KnownExpansions) {
  const auto s021 = series_for_pattern(SolvedPattern::p021, 8).integer_coefficients();
  const std::vector<BigCount> expected{1, 1, 2, 6, 21, 80, 322, 1347, 5798};
  EXPECT_EQ(s021, expected);
  const auto s012 = series_for_pattern(SolvedPattern::p012, 6).integer_coefficients();
  EXPECT_EQ(s012, (std::vector<BigCount>{1, 1, 2, 5, 13, 34, 89}));
  const auto s001 = series_for_pattern(SolvedPattern::p001, 5).integer_coefficients();
  EXPECT_EQ(s001, (std::vector<BigCount>{1, 1, 2, 4, 8, 16}));
}

TEST(Series, AgreesWithFormulaTo30) {
  for (SolvedPattern p : kSolvedPatterns) {
    const auto coeffs = series_for_pattern(p, 30).integer_coefficients();
    EXPECT_EQ(coeffs[0], 1);
    for (std::int64_t n = 1; n <= 30; ++n) EXPECT_EQ(coeffs[n], formula_count(p, n)) << name(p) << " n=" << n;
  }
}

TEST(Fixpoint, ResidualsVanish) {
  const std::size_t N = 30;
  const PowerSeries one = PowerSeries::constant(N, 1);
  const PowerSeries f = solve_fixpoint(FunctionalEquation::EQ102, N);
  EXPECT_TRUE((f - one - PowerSeries(N, {0, 1, -1}) * f * f * f).is_zero());
  const PowerSeries g = solve_fixpoint(FunctionalEquation::EQ021, N);
  const PowerSeries xg = g.shifted(1);
  // F = 1 + xF / (1 - xF^2), cleared of the denominator
  EXPECT_TRUE(((g - one) * (one - xg * g) - xg).is_zero());
}

TEST(SolvedPatternNames, RoundTrip) {
  for (SolvedPattern p : kSolvedPatterns) EXPECT_EQ(solved_pattern(to_pattern(p)), p);
  EXPECT_FALSE(solved_pattern(parse_pattern("210")).has_value());
}

TEST(TriangularBinomial, SmallValues) {
  EXPECT_EQ(triangular_binomial(5, 1), 1);
  EXPECT_EQ(triangular_binomial(3, 3), binomial(5, 0));
  EXPECT_THROW(triangular_binomial(3, 4), std::invalid_argument);
}

TEST(BTableTest, MatchesZeroCountBruteForce) {
  const std::size_t N = 7;
  const BTable table = b_table(N);
  EXPECT_EQ(table(3, 2), 3);
  const oracle::Word p011{0, 1, 1};
  for (std::size_t n = 1; n <= N; ++n) {
    std::vector<std::size_t> by_zeros(n + 1, 0);
    for (const auto& w : oracle::all_sequences(n)) {
      if (oracle::contains(w, p011)) continue;
      ++by_zeros[static_cast<std::size_t>(std::count(w.begin(), w.end(), 0u))];
    }
    for (std::size_t m = 1; m <= n; ++m) EXPECT_EQ(table(n, m), by_zeros[m]) << n << "," << m;
  }
}

TEST(BTableTest, EqualsTriangularBinomialAndRowSums) {
  const BTable table = b_table(25);
  for (std::size_t n = 1; n <= 25; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      EXPECT_EQ(table(n, m), triangular_binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m)));
    }
    EXPECT_EQ(table.row_sum(n), formula_count(SolvedPattern::p011, static_cast<std::int64_t>(n)));
  }
  EXPECT_EQ(table.row_sum(10), 32869);
}

TEST(Succession, LevelCounts) {
  const auto levels = succession_level_counts(20);
  ASSERT_EQ(levels.size(), 20u);
  for (std::size_t n = 1; n <= 20; ++n) EXPECT_EQ(levels[n - 1], power_of_two(static_cast<unsigned>(n - 1)));
  EXPECT_EQ(levels[3], 8);
}

// The rule only fixes how many children each label has: a_m has m + 2 and
// b_m has m + 1. On the real tree of 001-avoiders, a node with c children must
// therefore have children with child counts {1..c-1, c+1} if it is the
// strictly increasing sequence, and {1..c} otherwise.
TEST(Succession, RuleMatchesTheTreeOfSequences) {
  const Pattern p001{0, 0, 1};
  auto children_of = [&](const WeakAscentSequence& w) {
    std::vector<WeakAscentSequence> out;
    for (Letter x = 0; x <= w.weak_ascents() + 1; ++x) {
      Word longer = w.letters();
      longer.push_back(x);
      WeakAscentSequence child = validate(longer);
      if (!contains(child, p001)) out.push_back(std::move(child));
    }
    return out;
  };
  auto child_count_of = [](const SuccessionState& s) { return succession_children(s).size(); };
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& w : enumerate(n, p001)) {
      bool increasing = true;
      for (std::size_t i = 1; i < w.size(); ++i) increasing &= w[i - 1] < w[i];
      const auto kids = children_of(w);
      const std::size_t c = kids.size();
      ASSERT_GE(c, 1u);
      const SuccessionState label = increasing ? SuccessionState{SuccessionState::Kind::a, c - 2}
                                               : SuccessionState{SuccessionState::Kind::b, c - 1};
      std::multiset<std::size_t> predicted, actual;
      for (const auto& child : succession_children(label)) predicted.insert(child_count_of(child));
      for (const auto& kid : kids) actual.insert(children_of(kid).size());
      EXPECT_EQ(actual, predicted) << to_string(w);
    }
  }
}
