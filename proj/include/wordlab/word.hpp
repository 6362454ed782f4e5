#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/alphabet.hpp"

namespace wordlab {

/// A finite word: a sequence of letter indices into some Alphabet.
/// The empty word is valid. Comparison is plain lexicographic; use
/// shortlex_less for the canonical output order.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word prefix(std::size_t n) const;
  /// The last n letters.
  Word suffix(std::size_t n) const;
  Word subword(std::size_t pos, std::size_t len) const;

  bool starts_with(const Word& p) const;
  bool ends_with(const Word& s) const;
  bool is_proper_prefix_of(const Word& w) const { return size() < w.size() && w.starts_with(*this); }
  bool is_proper_suffix_of(const Word& w) const { return size() < w.size() && w.ends_with(*this); }
  bool is_factor_of(const Word& w) const;

  /// Start positions of all (possibly overlapping) occurrences of this word
  /// in w, ascending. The empty word occurs at every position 0..|w|.
  std::vector<std::size_t> occurrences_in(const Word& w) const;

  Word& operator+=(const Word& v);
  Word& operator+=(Letter a);
  friend Word operator+(Word u, const Word& v) { return u += v; }
  friend Word operator+(Word u, Letter a) { return u += a; }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

private:
  std::vector<Letter> letters_;
};

/// Length first, then lexicographic: the canonical order for all output.
bool shortlex_less(const Word& u, const Word& v);

struct ShortlexLess {
  bool operator()(const Word& u, const Word& v) const { return shortlex_less(u, v); }
};

/// Renders with symbols concatenated for single-character alphabets,
/// comma-joined otherwise. The empty word renders as "ε".
std::string render(const Word& w, const Alphabet& a);

/// Accepts the comma-joined form for any alphabet and the compact form for
/// single-character alphabets. An exact symbol match wins; "ε" and ""
/// parse as the empty word.
Word parse_word(std::string_view text, const Alphabet& a);

}  // namespace wordlab
