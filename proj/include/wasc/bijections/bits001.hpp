#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wasc/matching.hpp"
#include "wasc/sequence.hpp"

namespace wasc {

// Steps of a lattice path: 1 = up step U, 0 = flat step F.
using BitSequence = std::vector<std::uint8_t>;

inline BitSequence parse_bits(std::string_view text) {
  text = detail::trim(text);
  BitSequence bits;
  for (char c : text) {
    if (c != '0' && c != '1') throw ParseError("bit sequence must be a 01-string");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return bits;
}

inline std::string format_bits(const BitSequence& bits) {
  std::string out;
  for (auto b : bits) out += b ? '1' : '0';
  return out;
}

// Heights of the path's nodes: first occurrences in order of appearance
// (0, 1, ..., top), then the repeated heights in non-increasing order.
inline WeakAscentSequence bits_to_wasc001(const BitSequence& bits) {
  Word firsts{0}, repeats;
  Letter height = 0;
  for (auto step : bits) {
    if (step) {
      firsts.push_back(++height);
    } else {
      repeats.push_back(height);
    }
  }
  std::sort(repeats.begin(), repeats.end(), std::greater<>());
  firsts.insert(firsts.end(), repeats.begin(), repeats.end());
  return unchecked_sequence(std::move(firsts));
}

// Inverse on W(001) \ {empty}: F^{c_0} U F^{c_1} U ... U F^{c_j}, where
// 0..j is the strictly increasing prefix and c_v counts v in the rest.
inline BitSequence wasc001_to_bits(const WeakAscentSequence& w) {
  if (w.empty()) throw DomainError("bits001 is defined for non-empty sequences only");
  if (contains(w, Pattern{0, 0, 1})) throw DomainError("sequence contains 001");
  std::size_t top = 0;
  while (top + 1 < w.size() && w[top + 1] == w[top] + 1) ++top;
  std::vector<std::size_t> multiplicity(top + 1, 0);
  for (std::size_t i = top + 1; i < w.size(); ++i) ++multiplicity.at(w[i]);
  BitSequence bits;
  for (std::size_t v = 0; v <= top; ++v) {
    if (v) bits.push_back(1);
    bits.insert(bits.end(), multiplicity[v], 0);
  }
  return bits;
}

}  // namespace wasc
