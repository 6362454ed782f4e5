#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

/// A monoid morphism source* -> target*, given by one image word per source
/// letter. Immutable after construction.
class Morphism {
public:
  Morphism(Alphabet source, Alphabet target, std::vector<Word> images);

  const Alphabet& source() const { return source_; }
  const Alphabet& target() const { return target_; }
  const Word& image(Letter a) const { return images_.at(static_cast<std::size_t>(a)); }

  Word apply(const Word& w) const;

  bool nonerasing() const { return nonerasing_; }
  bool is_endomorphism() const { return source_ == target_; }
  /// image(a) starts with a and has length >= 2.
  bool prolongable_on(Letter a) const;

private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
  bool nonerasing_;
};

/// Builds a morphism from (symbol, image symbols) rules. Every source symbol
/// must be ruled exactly once; image symbols must belong to the target.
Morphism build_morphism(const Alphabet& source, const Alphabet& target,
                        const std::vector<std::pair<std::string, std::vector<std::string>>>& rules);

/// Whether some power f^k makes every letter appear in every image, tested by
/// boolean incidence-matrix squaring up to the Wielandt bound n^2-2n+2.
/// Requires an endomorphism.
bool is_primitive(const Morphism& m);

/// f^k(seed) for the smallest k with |f^k(seed)| >= min_len. Requires f
/// prolongable on seed; the result is a prefix of every later iterate.
Word fixpoint_prefix(const Morphism& m, Letter seed, std::size_t min_len);

}  // namespace wordlab
