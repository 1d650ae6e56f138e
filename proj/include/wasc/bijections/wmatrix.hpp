#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wasc/sequence.hpp"

namespace wasc {

// Upper-triangular 01-matrix with non-empty columns whose adjacent columns
// satisfy: top-most 1 of the left column is weakly above the bottom-most 1
// of the right one. Rows and columns are 1-based; value v lives in row v+1.
class WMatrix {
 public:
  using Position = std::pair<std::size_t, std::size_t>;  // (row, col)

  // Validating factory; throws DomainError on any violated condition.
  static WMatrix from_columns(std::vector<std::vector<std::size_t>> columns) {
    for (auto& column : columns) {
      std::sort(column.begin(), column.end());
      column.erase(std::unique(column.begin(), column.end()), column.end());
    }
    if (auto problem = violation(columns)) throw DomainError("not a WMat matrix: " + *problem);
    WMatrix m;
    m.columns_ = std::move(columns);
    return m;
  }

  static WMatrix from_ones(std::size_t dimension, const std::vector<Position>& ones) {
    std::vector<std::vector<std::size_t>> columns(dimension);
    for (auto [row, col] : ones) {
      if (row < 1 || col < 1 || row > dimension || col > dimension) {
        throw DomainError("one at (" + std::to_string(row) + "," + std::to_string(col) + ") is outside the matrix");
      }
      columns[col - 1].push_back(row);
    }
    return from_columns(std::move(columns));
  }

  std::size_t dimension() const noexcept { return columns_.size(); }

  // Rows holding a 1 in column `col` (1-based), ascending.
  const std::vector<std::size_t>& column(std::size_t col) const { return columns_.at(col - 1); }

  bool at(std::size_t row, std::size_t col) const {
    const auto& c = column(col);
    return std::binary_search(c.begin(), c.end(), row);
  }

  std::set<Position> ones() const {
    std::set<Position> out;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      for (std::size_t r : columns_[c]) out.insert({r, c + 1});
    }
    return out;
  }

  std::size_t count_ones() const {
    std::size_t total = 0;
    for (const auto& c : columns_) total += c.size();
    return total;
  }

  friend bool operator==(const WMatrix&, const WMatrix&) = default;

  static std::optional<std::string> violation(const std::vector<std::vector<std::size_t>>& columns) {
    const std::size_t d = columns.size();
    if (d == 0) return "empty matrix";
    for (std::size_t c = 0; c < d; ++c) {
      if (columns[c].empty()) return "column " + std::to_string(c + 1) + " is empty";
      if (columns[c].front() < 1) return "row index 0 in column " + std::to_string(c + 1);
      if (columns[c].back() > c + 1) return "entry below the diagonal in column " + std::to_string(c + 1);
    }
    for (std::size_t c = 0; c + 1 < d; ++c) {
      if (columns[c].front() > columns[c + 1].back()) {
        return "columns " + std::to_string(c + 1) + " and " + std::to_string(c + 2) + " break the adjacency rule";
      }
    }
    return std::nullopt;
  }

 private:
  WMatrix() = default;
  std::vector<std::vector<std::size_t>> columns_;
};

// Column j holds the values of the j-th maximal strictly decreasing run.
inline WMatrix wasc_to_wmat(const WeakAscentSequence& w) {
  if (w.empty()) throw DomainError("wmat is defined for non-empty sequences only");
  std::vector<std::vector<std::size_t>> columns;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i == 0 || w[i - 1] <= w[i]) columns.emplace_back();
    columns.back().push_back(w[i] + 1);
  }
  return WMatrix::from_columns(std::move(columns));
}

// Columns left to right, each read as its values in decreasing order.
inline WeakAscentSequence wmat_to_wasc(const WMatrix& m) {
  Word word;
  for (std::size_t c = 1; c <= m.dimension(); ++c) {
    const auto& rows = m.column(c);
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) word.push_back(static_cast<Letter>(*it - 1));
  }
  if (auto bad = first_violation(word)) throw InvalidSequence(*bad);
  return unchecked_sequence(std::move(word));
}

// 021 image: at most one 1 below row 1 per column, and those rows weakly
// increase from left to right.
inline bool is_wmat021_shape(const WMatrix& m) {
  std::size_t previous = 0;
  for (std::size_t c = 1; c <= m.dimension(); ++c) {
    const auto& rows = m.column(c);
    const auto below = std::count_if(rows.begin(), rows.end(), [](std::size_t r) { return r > 1; });
    if (below > 1) return false;
    if (below == 1) {
      if (rows.back() < previous) return false;
      previous = rows.back();
    }
  }
  return true;
}

// 011 image: every row other than the first holds at most one 1.
inline bool has_wmat011_rows(const WMatrix& m) {
  std::vector<std::size_t> per_row(m.dimension() + 1, 0);
  for (std::size_t c = 1; c <= m.dimension(); ++c) {
    for (std::size_t r : m.column(c)) {
      if (r > 1 && ++per_row[r] > 1) return false;
    }
  }
  return true;
}

// d lines of d characters from {0,1}.
inline std::string format_wmatrix(const WMatrix& m) {
  std::string out;
  for (std::size_t r = 1; r <= m.dimension(); ++r) {
    for (std::size_t c = 1; c <= m.dimension(); ++c) out += m.at(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

// Rows separated by newlines, '/' or ';'.
inline WMatrix parse_wmatrix(std::string_view text) {
  std::vector<std::string> rows;
  std::string current;
  for (char c : text) {
    if (c == '\n' || c == '/' || c == ';') {
      if (!current.empty()) rows.push_back(std::move(current));
      current.clear();
    } else if (c == '0' || c == '1') {
      current += c;
    } else if (c != ' ' && c != '\r' && c != '\t') {
      throw ParseError("bad matrix character '" + std::string(1, c) + "'");
    }
  }
  if (!current.empty()) rows.push_back(std::move(current));
  const std::size_t d = rows.size();
  if (d == 0) throw ParseError("empty matrix");
  std::vector<WMatrix::Position> ones;
  for (std::size_t r = 0; r < d; ++r) {
    if (rows[r].size() != d) throw ParseError("matrix must be square");
    for (std::size_t c = 0; c < d; ++c) {
      if (rows[r][c] == '1') ones.push_back({r + 1, c + 1});
    }
  }
  return WMatrix::from_ones(d, ones);
}

// Every matrix of WMat_n, generated column by column (independently of the
// sequence correspondence).
template <typename Visit>
void for_each_wmatrix(std::size_t n, Visit&& visit) {
  if (n > 20) throw std::invalid_argument("for_each_wmatrix supports n <= 20");
  std::vector<std::vector<std::size_t>> columns;
  auto recurse = [&](auto& self, std::size_t ones) -> void {
    if (ones == n) {
      if (!columns.empty()) visit(WMatrix::from_columns(columns));
      return;
    }
    const std::size_t c = columns.size() + 1;  // rows available: 1..c
    const std::size_t remaining = n - ones;
    for (std::uint32_t mask = 1; mask < (1u << c); ++mask) {
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      if (size > remaining) continue;
      std::vector<std::size_t> rows;
      for (std::size_t r = 0; r < c; ++r) {
        if (mask & (1u << r)) rows.push_back(r + 1);
      }
      if (!columns.empty() && columns.back().front() > rows.back()) continue;
      columns.push_back(std::move(rows));
      self(self, ones + size);
      columns.pop_back();
    }
  };
  recurse(recurse, 0);
}

}  // namespace wasc
