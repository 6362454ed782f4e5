#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordlab/factor_set.hpp"

namespace wordlab {

/// Two-sided extension data of a word w in a factor set S:
/// L(w) = {a : aw in S}, R(w) = {b : wb in S}, E(w) = {(a,b) : awb in S},
/// and the multiplicity m(w) = e(w) - l(w) - r(w) + 1.
struct ExtensionProfile {
  Word word;
  std::vector<Letter> left;                        // sorted
  std::vector<Letter> right;                       // sorted
  std::vector<std::pair<Letter, Letter>> pairs;    // sorted

  std::size_t l() const { return left.size(); }
  std::size_t r() const { return right.size(); }
  std::size_t e() const { return pairs.size(); }
  long long m() const {
    return static_cast<long long>(e()) - static_cast<long long>(l()) -
           static_cast<long long>(r()) + 1;
  }
};

ExtensionProfile extension_profile(const FactorSet& s, const Word& w);

/// The bipartite extension graph G(w): left vertices L(w), right vertices
/// R(w) (disjoint copies), one undirected edge per pair of E(w).
struct ExtensionGraph {
  Word word;
  std::vector<Letter> left;
  std::vector<Letter> right;
  std::vector<std::pair<Letter, Letter>> edges;
};

ExtensionGraph extension_graph(const FactorSet& s, const Word& w);

/// A vertex of G(w): a letter on one side of the bipartition.
struct GraphVertex {
  bool left_side;
  Letter letter;
  bool operator==(const GraphVertex&) const = default;
};

struct GraphShape {
  bool acyclic = true;
  bool connected = true;
  std::size_t component_count = 0;
  /// A closed walk witnessing the first detected cycle, when not acyclic.
  std::vector<GraphVertex> cycle;

  bool tree() const { return acyclic && connected; }
};

GraphShape analyze_graph(const ExtensionGraph& g);

enum class WordClass { Strong, Weak, Neutral };

struct WordVerdict {
  ExtensionProfile profile;
  WordClass cls;
  bool ordinary;
  bool acyclic;
  bool tree;
};

WordVerdict classify_word(const FactorSet& s, const Word& w);

/// Exhaustive classification of all words of length <= certified_up_to.
/// Set-level flags are conjunctions over those words; none of them claims
/// anything beyond the certified length.
struct SetVerdict {
  std::size_t certified_up_to = 0;

  bool strong = true;   // every word has m >= 0
  bool weak = true;     // every word has m <= 0
  bool neutral = true;  // every word has m == 0
  bool acyclic = true;
  bool tree = true;

  struct LengthTally {
    std::size_t strong_count = 0;
    std::size_t weak_count = 0;
    std::size_t neutral_count = 0;
  };
  std::vector<LengthTally> tallies;  // one per length 0..certified_up_to

  std::vector<WordVerdict> words;  // shortlex order

  std::optional<Word> first_non_tree_witness;
  std::vector<GraphVertex> witness_cycle;  // when the witness fails acyclicity
};

SetVerdict classify_set(const FactorSet& s, std::size_t up_to);

/// Checks b_n = sum of m(w) and s_n = sum of (r(w)-1) over S ∩ A^n against
/// the complexity profile.
struct EnumerationIdentityReport {
  std::size_t n = 0;
  long long b_n = 0;
  long long m_sum = 0;
  long long s_n = 0;
  long long r_minus_one_sum = 0;
  bool b_identity_holds = false;
  bool s_identity_holds = false;
  bool ok() const { return b_identity_holds && s_identity_holds; }
};

EnumerationIdentityReport check_enumeration_identities(const FactorSet& s, std::size_t n);

std::string to_string(WordClass c);

}  // namespace wordlab
