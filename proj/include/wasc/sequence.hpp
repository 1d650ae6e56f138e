#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wasc {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

// Malformed text input (bad digits, empty tokens, ...).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that lies outside the domain of an operation
// (e.g. a sequence containing the pattern a bijection requires it to avoid).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Rejection of a word that is not a weak ascent sequence. `index()` is the
// 1-based position of the first letter breaking the growth rule.
class InvalidSequence : public DomainError {
 public:
  explicit InvalidSequence(std::size_t index)
      : DomainError("not a weak ascent sequence: violation at index " + std::to_string(index)),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// Number of adjacent positions j with word[j] <= word[j+1].
inline std::size_t wasc(std::span<const Letter> word) {
  std::size_t count = 0;
  for (std::size_t j = 1; j < word.size(); ++j) {
    if (word[j - 1] <= word[j]) ++count;
  }
  return count;
}

// 1-based index of the first letter violating the weak ascent growth rule,
// or nullopt for a valid (possibly empty) word.
inline std::optional<std::size_t> first_violation(std::span<const Letter> word) {
  if (word.empty()) return std::nullopt;
  if (word[0] != 0) return 1;
  std::size_t ascents = 0;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i] > ascents + 1) return i + 1;
    if (word[i - 1] <= word[i]) ++ascents;
  }
  return std::nullopt;
}

class WeakAscentSequence {
 public:
  WeakAscentSequence() = default;

  // Validating constructor; throws InvalidSequence.
  explicit WeakAscentSequence(Word letters) : letters_(std::move(letters)) {
    if (auto bad = first_violation(letters_)) throw InvalidSequence(*bad);
  }

  WeakAscentSequence(std::initializer_list<Letter> letters) : WeakAscentSequence(Word(letters)) {}

  const Word& letters() const noexcept { return letters_; }
  std::span<const Letter> view() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  std::size_t weak_ascents() const noexcept { return wasc(letters_); }

  friend auto operator<=>(const WeakAscentSequence&, const WeakAscentSequence&) = default;

 private:
  struct trusted_tag {};
  WeakAscentSequence(Word letters, trusted_tag) : letters_(std::move(letters)) {}

  friend WeakAscentSequence unchecked_sequence(Word letters);

  Word letters_;
};

// For internal producers whose output is valid by construction.
inline WeakAscentSequence unchecked_sequence(Word letters) {
  return WeakAscentSequence(std::move(letters), WeakAscentSequence::trusted_tag{});
}

inline WeakAscentSequence validate(Word word) { return WeakAscentSequence(std::move(word)); }

// A word over {0, ..., k-1} in which every letter occurs. Ill-formed letter
// sets are reported as ParseError.
class Pattern {
 public:
  explicit Pattern(Word letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw ParseError("pattern must be non-empty");
    alphabet_size_ = *std::max_element(letters_.begin(), letters_.end()) + 1;
    std::vector<bool> seen(alphabet_size_, false);
    for (Letter a : letters_) seen[a] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw ParseError("pattern must use every letter 0.." + std::to_string(alphabet_size_ - 1));
    }
  }

  Pattern(std::initializer_list<Letter> letters) : Pattern(Word(letters)) {}

  const Word& letters() const noexcept { return letters_; }
  std::span<const Letter> view() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Pattern& a, const Pattern& b) { return a.letters_ == b.letters_; }

 private:
  Word letters_;
  std::size_t alphabet_size_ = 0;
};

namespace detail {

inline std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

inline Letter parse_letter(std::string_view token) {
  token = trim(token);
  if (token.empty()) throw ParseError("empty letter");
  Letter value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("bad letter '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace detail

// Comma-separated decimals ("0,0,2,1"), or a compact digit string ("0021")
// with one letter per digit. Empty text is the empty word.
inline Word parse_word(std::string_view text) {
  text = detail::trim(text);
  Word word;
  if (text.empty()) return word;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("bad character '" + std::string(1, c) + "' in compact word");
      }
      word.push_back(static_cast<Letter>(c - '0'));
    }
    return word;
  }
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    word.push_back(detail::parse_letter(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return word;
}

inline std::string format_word(std::span<const Letter> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

// Digit-per-letter form; only meaningful when every letter is at most 9.
inline std::string format_compact(std::span<const Letter> word) {
  std::string out;
  for (Letter a : word) {
    if (a > 9) return format_word(word);
    out += static_cast<char>('0' + a);
  }
  return out;
}

inline WeakAscentSequence parse_sequence(std::string_view text) { return validate(parse_word(text)); }

inline Pattern parse_pattern(std::string_view text) { return Pattern(parse_word(text)); }

inline std::string to_string(const WeakAscentSequence& w) { return format_word(w.view()); }
inline std::string to_string(const Pattern& p) { return format_compact(p.view()); }

}  // namespace wasc
