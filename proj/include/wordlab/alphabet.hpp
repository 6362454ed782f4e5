#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/errors.hpp"

namespace wordlab {

/// Index of a letter within its Alphabet.
using Letter = std::int32_t;

/// An ordered, finite, nonempty set of named symbols. Letters are dense
/// indices 0..size()-1; all rendering goes back through the symbol names.
/// Symbol names may be longer than one character.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(Letter a) const { return symbols_.at(static_cast<std::size_t>(a)); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  std::optional<Letter> find(std::string_view symbol) const;
  /// Like find(), but throws Error for unknown symbols.
  Letter require(std::string_view symbol) const;

  /// True when every symbol is a single character (words then render compactly).
  bool single_char() const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

private:
  std::vector<std::string> symbols_;
  std::map<std::string, Letter, std::less<>> index_;
};

}  // namespace wordlab
