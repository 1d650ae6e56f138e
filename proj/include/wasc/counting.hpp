#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wasc/big.hpp"
#include "wasc/power_series.hpp"
#include "wasc/sequence.hpp"

namespace wasc {

// Length-3 patterns with a known counting formula.
enum class SolvedPattern { p001, p011, p012, p021, p102 };

inline constexpr SolvedPattern kSolvedPatterns[] = {SolvedPattern::p001, SolvedPattern::p011, SolvedPattern::p012,
                                                    SolvedPattern::p021, SolvedPattern::p102};

inline std::string_view name(SolvedPattern p) {
  switch (p) {
    case SolvedPattern::p001: return "001";
    case SolvedPattern::p011: return "011";
    case SolvedPattern::p012: return "012";
    case SolvedPattern::p021: return "021";
    case SolvedPattern::p102: return "102";
  }
  throw std::logic_error("unknown solved pattern");
}

inline Pattern to_pattern(SolvedPattern p) { return parse_pattern(name(p)); }

inline std::optional<SolvedPattern> solved_pattern(const Pattern& p) {
  for (SolvedPattern s : kSolvedPatterns) {
    if (to_pattern(s) == p) return s;
  }
  return std::nullopt;
}

// Fibonacci numbers with F_1 = F_2 = 1.
inline BigCount fibonacci(std::size_t k) {
  if (k == 0) throw std::invalid_argument("fibonacci index must be >= 1");
  BigCount previous = 0, current = 1;
  for (std::size_t i = 1; i < k; ++i) {
    BigCount next = previous + current;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

// C(n - 1 + C(m, 2), n - m).
inline BigCount triangular_binomial(std::int64_t n, std::int64_t m) {
  if (m < 1 || m > n) throw std::invalid_argument("triangular_binomial requires 1 <= m <= n");
  return binomial(n - 1 + m * (m - 1) / 2, n - m);
}

// Closed-form value of w_p(n), n >= 1. Sums with internal division are
// accumulated over the rationals and must land on a non-negative integer.
inline BigCount formula_count(SolvedPattern p, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("formula_count requires n >= 1");
  switch (p) {
    case SolvedPattern::p001:
      return power_of_two(static_cast<unsigned>(n - 1));
    case SolvedPattern::p011: {
      BigCount total = 0;
      for (std::int64_t m = 1; m <= n; ++m) total += triangular_binomial(n, m);
      return total;
    }
    case SolvedPattern::p012:
      return fibonacci(static_cast<std::size_t>(2 * n - 1));
    case SolvedPattern::p021: {
      // G = F - 1 satisfies G = x (1 + G)(1 + G + G^2); Lagrange inversion
      // gives (1/n) [u^{n-1}] (1+u)^n (1 + u(1+u))^n.
      Rational total = 0;
      for (std::int64_t k = 0; k <= n - 1; ++k) {
        total += Rational(binomial(n, k) * binomial(n + k, n - 1 - k), BigCount(n));
      }
      return exact_non_negative_integer(total, "formula_count(021)");
    }
    case SolvedPattern::p102: {
      Rational total = 0;
      for (std::int64_t k = 0; k <= n / 2; ++k) {
        Rational term(binomial(n - k, k) * binomial(3 * (n - k), n - k), BigCount(2 * (n - k) + 1));
        if (k % 2) total -= term;
        else total += term;
      }
      return exact_non_negative_integer(total, "formula_count(102)");
    }
  }
  throw std::logic_error("unknown solved pattern");
}

// (1/n) sum_k C(2n-2k-2, n-k-1) C(n+k-1, n-1), a commonly quoted single sum
// for w_021(n). It agrees with the true counts only for n <= 6 (n = 7 gives
// 1348 instead of 1347), so formula_count does not use it.
inline Rational single_sum_021(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("single_sum_021 requires n >= 1");
  Rational total = 0;
  for (std::int64_t k = 0; k <= n - 1; ++k) {
    total += Rational(binomial(2 * n - 2 * k - 2, n - k - 1) * binomial(n + k - 1, n - 1), BigCount(n));
  }
  return total;
}

// numerator / denominator expanded to order N.
inline PowerSeries expand_rational(const PowerSeries& numerator, const PowerSeries& denominator, std::size_t order) {
  return numerator.with_order(order) / denominator.with_order(order);
}

enum class FunctionalEquation {
  EQ102,  // f = 1 + x (1 - x) f^3
  EQ021,  // f = 1 + x f / (1 - x f^2)
};

// Right-hand side of the functional equation, evaluated at g.
inline PowerSeries apply_equation(FunctionalEquation eq, const PowerSeries& g) {
  const std::size_t order = g.order();
  const PowerSeries one = PowerSeries::constant(order, 1);
  switch (eq) {
    case FunctionalEquation::EQ102: {
      const PowerSeries x_times_one_minus_x(order, {0, 1, -1});
      return one + x_times_one_minus_x * (g * g * g);
    }
    case FunctionalEquation::EQ021: {
      const PowerSeries xg = g.shifted(1);
      return one + xg / (one - xg * g);
    }
  }
  throw std::logic_error("unknown functional equation");
}

// Fixpoint iteration from g = 1. Each step fixes at least one more
// coefficient, so order + 2 iterations always reach a stationary series.
inline PowerSeries solve_fixpoint(FunctionalEquation eq, std::size_t order) {
  PowerSeries g = PowerSeries::constant(order, 1);
  for (std::size_t iteration = 0; iteration < order + 2; ++iteration) {
    PowerSeries next = apply_equation(eq, g);
    if (next == g) return g;
    g = std::move(next);
  }
  throw std::logic_error("fixpoint iteration did not converge");
}

// Generating function of W(p) to order N: coefficient n is w_p(n), and 1 at n = 0.
inline PowerSeries series_for_pattern(SolvedPattern p, std::size_t order) {
  switch (p) {
    case SolvedPattern::p001:
      return PowerSeries::constant(order, 1) +
             expand_rational(PowerSeries(order, {0, 1}), PowerSeries(order, {1, -2}), order);
    case SolvedPattern::p012:
      return expand_rational(PowerSeries(order, {1, -2}), PowerSeries(order, {1, -3, 1}), order);
    case SolvedPattern::p021:
      return solve_fixpoint(FunctionalEquation::EQ021, order);
    case SolvedPattern::p102:
      return solve_fixpoint(FunctionalEquation::EQ102, order);
    case SolvedPattern::p011: {
      // no generating function is known; fill termwise
      PowerSeries s = PowerSeries::constant(order, 1);
      for (std::size_t n = 1; n <= order; ++n) s[n] = Rational(formula_count(p, static_cast<std::int64_t>(n)));
      return s;
    }
  }
  throw std::logic_error("unknown solved pattern");
}

// B(n, m): 011-avoiders of length n with exactly m zeros, 1 <= m <= n <= n_max.
class BTable {
 public:
  explicit BTable(std::size_t n_max) : n_max_(n_max), cells_((n_max + 1) * (n_max + 1), BigCount(0)) {}

  std::size_t n_max() const noexcept { return n_max_; }

  const BigCount& operator()(std::size_t n, std::size_t m) const { return cells_.at(n * (n_max_ + 1) + m); }
  BigCount& operator()(std::size_t n, std::size_t m) { return cells_.at(n * (n_max_ + 1) + m); }

  BigCount row_sum(std::size_t n) const {
    BigCount total = 0;
    for (std::size_t m = 1; m <= n; ++m) total += (*this)(n, m);
    return total;
  }

 private:
  std::size_t n_max_;
  std::vector<BigCount> cells_;
};

// Fills B(n, m) = sum_{k=m}^{n} B(k-1, m-1) C(n-k+m-1, n-k) from B(n, 1) = 1.
inline BTable b_table(std::size_t n_max) {
  if (n_max < 1) throw std::invalid_argument("b_table requires n_max >= 1");
  BTable table(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) table(n, 1) = 1;
  for (std::size_t m = 2; m <= n_max; ++m) {
    for (std::size_t n = m; n <= n_max; ++n) {
      BigCount total = 0;
      for (std::size_t k = m; k <= n; ++k) {
        total += table(k - 1, m - 1) * binomial(static_cast<std::int64_t>(n - k + m - 1), static_cast<std::int64_t>(n - k));
      }
      table(n, m) = std::move(total);
    }
  }
  return table;
}

// Labels of the 001 generating tree: a_m = 01..m and b_m = 01..mm.
struct SuccessionState {
  enum class Kind { a, b };
  Kind kind;
  std::size_t index;

  friend bool operator==(const SuccessionState&, const SuccessionState&) = default;
};

//   a_m -> b_0, ..., b_m, a_{m+1}     b_m -> b_0, ..., b_m
inline std::vector<SuccessionState> succession_children(SuccessionState node) {
  std::vector<SuccessionState> children;
  for (std::size_t j = 0; j <= node.index; ++j) children.push_back({SuccessionState::Kind::b, j});
  if (node.kind == SuccessionState::Kind::a) children.push_back({SuccessionState::Kind::a, node.index + 1});
  return children;
}

// Node count per level 1..n_max of the generating tree rooted at a_0. Only
// label multiplicities are tracked; no sequences are built.
inline std::vector<BigCount> succession_level_counts(std::size_t n_max) {
  if (n_max < 1) throw std::invalid_argument("succession_level_counts requires n_max >= 1");
  using Kind = SuccessionState::Kind;
  // multiplicity[kind][m]; labels at level L have index <= L - 1
  auto fresh = [&] { return std::vector<std::vector<BigCount>>(2, std::vector<BigCount>(n_max + 1, BigCount(0))); };
  auto multiplicity = fresh();
  multiplicity[0][0] = 1;

  std::vector<BigCount> levels;
  for (std::size_t level = 1;; ++level) {
    BigCount total = 0;
    for (const auto& row : multiplicity) {
      for (const BigCount& c : row) total += c;
    }
    levels.push_back(std::move(total));
    if (level == n_max) break;

    auto next = fresh();
    for (int kind = 0; kind < 2; ++kind) {
      for (std::size_t m = 0; m < level; ++m) {
        const BigCount& count = multiplicity[kind][m];
        if (count == 0) continue;
        for (SuccessionState child : succession_children({kind == 0 ? Kind::a : Kind::b, m})) {
          next[child.kind == Kind::a ? 0 : 1][child.index] += count;
        }
      }
    }
    multiplicity = std::move(next);
  }
  return levels;
}

}  // namespace wasc
