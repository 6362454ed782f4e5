#include "wordlab/morphism.hpp"

#include <algorithm>

namespace wordlab {

namespace {
constexpr std::size_t kFixpointIterationCap = 64;
constexpr std::size_t kFixpointLengthCap = std::size_t(1) << 26;
}  // namespace

Morphism::Morphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.size())
    throw Error("morphism needs exactly one image per source letter");
  nonerasing_ = true;
  for (const Word& im : images_) {
    if (im.empty()) nonerasing_ = false;
    for (Letter b : im) {
      if (b < 0 || static_cast<std::size_t>(b) >= target_.size())
        throw Error("morphism image uses a letter outside the target alphabet");
    }
  }
}

Word Morphism::apply(const Word& w) const {
  Word out;
  for (Letter a : w) {
    if (a < 0 || static_cast<std::size_t>(a) >= source_.size())
      throw Error("word uses a letter outside the morphism source alphabet");
    out += image(a);
  }
  return out;
}

bool Morphism::prolongable_on(Letter a) const {
  if (!is_endomorphism()) return false;
  const Word& im = image(a);
  return im.size() >= 2 && im[0] == a;
}

Morphism build_morphism(const Alphabet& source, const Alphabet& target,
                        const std::vector<std::pair<std::string, std::vector<std::string>>>& rules) {
  std::vector<Word> images(source.size());
  std::vector<bool> seen(source.size(), false);
  for (const auto& [sym, image_syms] : rules) {
    Letter a = source.require(sym);
    if (seen[static_cast<std::size_t>(a)]) throw Error("duplicate rule for letter '" + sym + "'");
    seen[static_cast<std::size_t>(a)] = true;
    Word im;
    for (const auto& t : image_syms) im += target.require(t);
    images[static_cast<std::size_t>(a)] = std::move(im);
  }
  for (std::size_t i = 0; i < source.size(); ++i)
    if (!seen[i]) throw Error("missing rule for letter '" + source.symbol(static_cast<Letter>(i)) + "'");
  return Morphism(source, target, std::move(images));
}

bool is_primitive(const Morphism& m) {
  if (!m.is_endomorphism()) throw Error("primitivity is defined for endomorphisms only");
  const std::size_t n = m.source().size();
  // M[a][b] = 1 iff b appears in image(a). Once some power is all-ones, all
  // later powers stay all-ones, so checking one power >= the Wielandt bound
  // decides.
  std::vector<std::vector<bool>> mat(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (Letter b : m.image(static_cast<Letter>(a))) mat[a][static_cast<std::size_t>(b)] = true;

  auto boolean_square = [n](const std::vector<std::vector<bool>>& x) {
    std::vector<std::vector<bool>> y(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (x[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (x[k][j]) y[i][j] = true;
    return y;
  };

  const std::size_t wielandt = n * n - 2 * n + 2;
  std::size_t exponent = 1;
  while (exponent < wielandt) {
    mat = boolean_square(mat);
    exponent *= 2;
  }
  for (const auto& row : mat)
    for (bool cell : row)
      if (!cell) return false;
  return true;
}

Word fixpoint_prefix(const Morphism& m, Letter seed, std::size_t min_len) {
  if (!m.prolongable_on(seed))
    throw Error("morphism is not prolongable on '" + m.source().symbol(seed) + "'");
  Word w({seed});
  for (std::size_t iter = 0; w.size() < min_len; ++iter) {
    if (iter >= kFixpointIterationCap)
      throw Error("fixpoint iteration cap reached before the requested length");
    Word next = m.apply(w);
    if (next.size() > kFixpointLengthCap) throw Error("fixpoint prefix length overflow");
    if (next.size() <= w.size())
      throw Error("fixpoint iterates stopped growing before the requested length");
    w = std::move(next);
  }
  return w;
}

}  // namespace wordlab
