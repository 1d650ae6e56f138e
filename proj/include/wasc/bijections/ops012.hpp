#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wasc/matching.hpp"
#include "wasc/sequence.hpp"

namespace wasc {

// One step building a 012-avoider (before its leading 0 is added):
//   O     append 0
//   I     append 1
//   E(l)  prepend l-1 zeros, add l-1 to every positive letter, append l (l >= 2)
struct Operation {
  enum class Kind { O, I, E };
  Kind kind = Kind::O;
  Letter ell = 0;

  static Operation O() { return {Kind::O, 0}; }
  static Operation I() { return {Kind::I, 0}; }
  static Operation E(Letter ell) {
    if (ell < 2) throw DomainError("operation E requires l >= 2");
    return {Kind::E, ell};
  }

  friend bool operator==(const Operation&, const Operation&) = default;
};

// Stored in application order (first applied first).
using OperationSequence = std::vector<Operation>;

// Parts are 1 or 2.
using Composition12 = std::vector<std::uint8_t>;

inline std::string format_operations(const OperationSequence& ops) {
  std::string out;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (i) out += ',';
    switch (ops[i].kind) {
      case Operation::Kind::O: out += 'O'; break;
      case Operation::Kind::I: out += 'I'; break;
      case Operation::Kind::E: out += 'E' + std::to_string(ops[i].ell); break;
    }
  }
  return out;
}

// "E4,I,I,O" (application order); commas optional between tokens.
inline OperationSequence parse_operations(std::string_view text) {
  OperationSequence ops;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == 'O') {
      ops.push_back(Operation::O());
      ++i;
    } else if (c == 'I') {
      ops.push_back(Operation::I());
      ++i;
    } else if (c == 'E') {
      std::size_t j = ++i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw ParseError("operation E needs a subscript");
      const Letter ell = detail::parse_letter(text.substr(i, j - i));
      if (ell < 2) throw ParseError("operation E requires l >= 2");
      ops.push_back(Operation::E(ell));
      i = j;
    } else {
      throw ParseError("bad operation character '" + std::string(1, c) + "'");
    }
  }
  return ops;
}

inline WeakAscentSequence apply_ops(const OperationSequence& ops) {
  Word word;
  for (const Operation& op : ops) {
    switch (op.kind) {
      case Operation::Kind::O: word.push_back(0); break;
      case Operation::Kind::I: word.push_back(1); break;
      case Operation::Kind::E: {
        for (Letter& a : word) {
          if (a > 0) a += op.ell - 1;
        }
        word.insert(word.begin(), op.ell - 1, 0);
        word.push_back(op.ell);
        break;
      }
    }
  }
  word.insert(word.begin(), 0);
  return unchecked_sequence(std::move(word));
}

// Inverse of apply_ops on W(012): drop the leading 0, then peel the last
// letter k repeatedly (0 -> O, 1 -> I, k > 1 -> E_k, which also removes the
// first k-1 zeros and lowers the positive letters by k-1).
inline OperationSequence wasc012_to_ops(const WeakAscentSequence& w) {
  if (w.empty()) throw DomainError("ops012 is defined for non-empty sequences only");
  if (contains(w, Pattern{0, 1, 2})) throw DomainError("sequence contains 012");
  Word word(w.begin() + 1, w.end());
  OperationSequence peeled;
  while (!word.empty()) {
    const Letter k = word.back();
    word.pop_back();
    if (k == 0) {
      peeled.push_back(Operation::O());
    } else if (k == 1) {
      peeled.push_back(Operation::I());
    } else {
      for (Letter removed = 0; removed < k - 1; ++removed) {
        auto zero = std::find(word.begin(), word.end(), Letter{0});
        if (zero == word.end()) throw DomainError("sequence has too few zeros to undo E" + std::to_string(k));
        word.erase(zero);
      }
      for (Letter& a : word) {
        if (a > 0) a -= k - 1;
      }
      peeled.push_back(Operation::E(k));
    }
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

// Tokens O -> 11, I -> 2, E_l -> 1 2^{l-1} 1, emitted last-applied first.
inline Composition12 ops_to_composition(const OperationSequence& ops) {
  Composition12 parts;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    switch (it->kind) {
      case Operation::Kind::O: parts.insert(parts.end(), {1, 1}); break;
      case Operation::Kind::I: parts.push_back(2); break;
      case Operation::Kind::E:
        parts.push_back(1);
        parts.insert(parts.end(), it->ell - 1, 2);
        parts.push_back(1);
        break;
    }
  }
  return parts;
}

inline OperationSequence composition_to_ops(const Composition12& parts) {
  unsigned sum = 0;
  for (auto part : parts) {
    if (part != 1 && part != 2) throw DomainError("composition parts must be 1 or 2");
    sum += part;
  }
  if (sum % 2) throw DomainError("composition must have an even sum");
  OperationSequence reversed;
  std::size_t i = 0;
  while (i < parts.size()) {
    if (parts[i] == 2) {
      reversed.push_back(Operation::I());
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < parts.size() && parts[j] == 2) ++j;
    if (j == parts.size()) throw std::logic_error("unmatched 1 in an even composition");
    const Letter twos = static_cast<Letter>(j - i - 1);
    reversed.push_back(twos == 0 ? Operation::O() : Operation::E(twos + 1));
    i = j + 1;
  }
  return {reversed.rbegin(), reversed.rend()};
}

inline Composition12 parse_composition(std::string_view text) {
  text = detail::trim(text);
  Composition12 parts;
  for (char c : text) {
    if (c == '.' || c == ',' || c == ' ') continue;
    if (c != '1' && c != '2') throw ParseError("composition parts must be 1 or 2");
    parts.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return parts;
}

inline std::string format_composition(const Composition12& parts) {
  std::string out;
  for (auto part : parts) out += static_cast<char>('0' + part);
  return out;
}

}  // namespace wasc
