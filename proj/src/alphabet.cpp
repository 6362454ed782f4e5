#include "wordlab/alphabet.hpp"

namespace wordlab {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error("alphabet must contain at least one symbol");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].empty()) throw Error("alphabet symbols must be nonempty");
    auto [it, inserted] = index_.emplace(symbols_[i], static_cast<Letter>(i));
    if (!inserted) throw Error("duplicate alphabet symbol '" + symbols_[i] + "'");
  }
}

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
  auto it = index_.find(symbol);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::require(std::string_view symbol) const {
  auto found = find(symbol);
  if (!found) throw Error("unknown symbol '" + std::string(symbol) + "'");
  return *found;
}

bool Alphabet::single_char() const {
  for (const auto& s : symbols_)
    if (s.size() != 1) return false;
  return true;
}

}  // namespace wordlab
