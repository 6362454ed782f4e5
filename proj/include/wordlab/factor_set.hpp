#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wordlab/morphism.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

/// A factorial set of words truncated at an explicit horizon N: every factor
/// of a stored word is stored, the empty word is stored, nothing longer than
/// N is stored. Backed by a trie; immutable once built.
///
/// certified() records the evidence basis of the construction: for fixpoint
/// sets it means the length-N factor sets of two consecutive iterates agreed
/// (see factor_set_of_fixpoint), for explicit word families it is true by
/// construction.
class FactorSet {
public:
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t horizon() const { return horizon_; }
  bool certified() const { return certified_; }
  const std::string& provenance() const { return provenance_; }

  /// Membership. Throws HorizonError for |w| > horizon: the answer would be
  /// unknowable, not false.
  bool contains(const Word& w) const;

  /// p_n = Card(S ∩ A^n).
  std::size_t count_at(std::size_t n) const;
  const std::vector<std::size_t>& level_counts() const { return level_counts_; }

  std::vector<Word> words_of_length(std::size_t n) const;  // lexicographic
  std::vector<Word> words_up_to(std::size_t n) const;      // shortlex
  std::size_t total_words() const;

  bool same_content(const FactorSet& other) const;

  /// Every stored word has all of its factors stored (test hook; the
  /// builders guarantee it).
  bool is_factorial() const;

  class Builder {
  public:
    Builder(Alphabet alphabet, std::size_t horizon);
    /// Inserts every factor of w of length <= horizon.
    void add_factors(const Word& w);
    /// Inserts w and its prefixes only. Sound only when the inserted family
    /// is already factorial (as in bifix decoding).
    void add_word(const Word& w);
    FactorSet finish(bool certified, std::string provenance);

  private:
    FactorSet set_;
    void insert_path(const Word& w, std::size_t start, std::size_t len);
  };

private:
  FactorSet() = default;

  struct Node {
    std::vector<std::int32_t> child;  // one slot per letter, -1 = absent
  };

  std::int32_t walk(const Word& w) const;  // node index or -1

  Alphabet alphabet_;
  std::size_t horizon_ = 0;
  bool certified_ = false;
  std::string provenance_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> level_counts_;
};

/// Factors of length <= horizon of the fixpoint f^ω(seed), run through
/// post_image when given (so: factors of post_image(f^ω(seed))).
///
/// Iterates f^k(seed) until the factor sets at the horizon of two consecutive
/// iterates coincide and the scanned prefix is at least 4x the horizon; the
/// result is then marked certified. The horizon cannot prove exhaustiveness
/// for arbitrary morphisms; the certificate records the declared criterion.
FactorSet factor_set_of_fixpoint(const Morphism& m, Letter seed,
                                 const std::optional<Morphism>& post_image,
                                 std::size_t horizon);

/// Factorial closure of all factors of length <= horizon of the given words.
FactorSet factor_set_of_words(const Alphabet& alphabet, const std::vector<Word>& words,
                              std::size_t horizon);

/// p_n, its first difference s_n = p_{n+1} - p_n and second difference
/// b_n = s_{n+1} - s_n, for n up to the horizon.
struct ComplexityProfile {
  std::vector<std::size_t> p;
  std::vector<long long> s;
  std::vector<long long> b;
};

ComplexityProfile complexity_profile(const FactorSet& s);

struct ReturnWords {
  std::vector<Word> words;  // shortlex
  /// True iff doubling the scan length left the set unchanged. Empirical:
  /// uniform recurrence cannot be decided from a finite prefix.
  bool complete = false;
  std::size_t scan_len = 0;
};

/// First right return words to w, scanned from consecutive occurrences of w
/// in a prefix of length >= scan_len of (post_image of) the fixpoint.
ReturnWords return_words(const Morphism& m, Letter seed,
                         const std::optional<Morphism>& post_image, const Word& w,
                         std::size_t scan_len);

struct RecurrenceWitness {
  Word word;
  /// Least n with `word` a factor of every element of S ∩ A^n, when such an
  /// n exists within the horizon.
  std::optional<std::size_t> witness_length;
};

/// One witness entry per word of S of length <= up_to (shortlex order).
std::vector<RecurrenceWitness> uniform_recurrence_report(const FactorSet& s, std::size_t up_to);

}  // namespace wordlab
