#include "wordlab/word.hpp"

#include <algorithm>

namespace wordlab {

Word Word::prefix(std::size_t n) const {
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(std::min(n, size()))));
}

Word Word::suffix(std::size_t n) const {
  n = std::min(n, size());
  return Word(std::vector<Letter>(letters_.end() - static_cast<std::ptrdiff_t>(n), letters_.end()));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, size());
  len = std::min(len, size() - pos);
  auto first = letters_.begin() + static_cast<std::ptrdiff_t>(pos);
  return Word(std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(len)));
}

bool Word::starts_with(const Word& p) const {
  return p.size() <= size() && std::equal(p.begin(), p.end(), begin());
}

bool Word::ends_with(const Word& s) const {
  return s.size() <= size() && std::equal(s.begin(), s.end(), end() - static_cast<std::ptrdiff_t>(s.size()));
}

bool Word::is_factor_of(const Word& w) const {
  if (size() > w.size()) return false;
  auto it = std::search(w.begin(), w.end(), begin(), end());
  return it != w.end() || empty();
}

std::vector<std::size_t> Word::occurrences_in(const Word& w) const {
  std::vector<std::size_t> out;
  if (size() > w.size()) return out;
  for (std::size_t i = 0; i + size() <= w.size(); ++i) {
    if (std::equal(begin(), end(), w.begin() + static_cast<std::ptrdiff_t>(i))) out.push_back(i);
  }
  return out;
}

Word& Word::operator+=(const Word& v) {
  letters_.insert(letters_.end(), v.letters_.begin(), v.letters_.end());
  return *this;
}

Word& Word::operator+=(Letter a) {
  letters_.push_back(a);
  return *this;
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u < v;
}

std::string render(const Word& w, const Alphabet& a) {
  if (w.empty()) return "ε";
  std::string out;
  const bool compact = a.single_char();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !compact) out += ',';
    out += a.symbol(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text, const Alphabet& a) {
  if (text.empty() || text == "ε") return Word();
  if (auto single = a.find(text)) return Word({*single});
  std::vector<Letter> letters;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      if (tok.empty()) throw Error("empty symbol in word '" + std::string(text) + "'");
      letters.push_back(a.require(tok));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return Word(std::move(letters));
  }
  if (!a.single_char())
    throw Error("cannot split '" + std::string(text) + "' over a multi-character alphabet; use comma-joined symbols");
  for (char c : text) letters.push_back(a.require(std::string_view(&c, 1)));
  return Word(std::move(letters));
}

}  // namespace wordlab
