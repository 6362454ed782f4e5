#include "wordlab/factor_set.hpp"

#include <algorithm>

namespace wordlab {

namespace {
constexpr std::size_t kStabilizationIterationCap = 64;
}

// ---------------------------------------------------------------------------
// FactorSet queries

std::int32_t FactorSet::walk(const Word& w) const {
  std::int32_t node = 0;
  for (Letter a : w) {
    node = nodes_[static_cast<std::size_t>(node)].child[static_cast<std::size_t>(a)];
    if (node < 0) return -1;
  }
  return node;
}

bool FactorSet::contains(const Word& w) const {
  if (w.size() > horizon_)
    throw HorizonError("membership query beyond the stored horizon", w.size(), horizon_);
  for (Letter a : w)
    if (a < 0 || static_cast<std::size_t>(a) >= alphabet_.size())
      throw Error("word uses a letter outside the set's alphabet");
  return walk(w) >= 0;
}

std::size_t FactorSet::count_at(std::size_t n) const {
  if (n > horizon_) throw HorizonError("p_n beyond the stored horizon", n, horizon_);
  return level_counts_[n];
}

std::vector<Word> FactorSet::words_of_length(std::size_t n) const {
  if (n > horizon_) throw HorizonError("word listing beyond the stored horizon", n, horizon_);
  std::vector<Word> out;
  Word current;
  // Depth-first in letter order yields lexicographic order.
  auto dfs = [&](auto&& self, std::int32_t node, std::size_t depth) -> void {
    if (depth == n) {
      out.push_back(current);
      return;
    }
    const Node& nd = nodes_[static_cast<std::size_t>(node)];
    for (std::size_t a = 0; a < alphabet_.size(); ++a) {
      if (nd.child[a] < 0) continue;
      current += static_cast<Letter>(a);
      self(self, nd.child[a], depth + 1);
      current = current.prefix(current.size() - 1);
    }
  };
  dfs(dfs, 0, 0);
  return out;
}

std::vector<Word> FactorSet::words_up_to(std::size_t n) const {
  if (n > horizon_) throw HorizonError("word listing beyond the stored horizon", n, horizon_);
  std::vector<Word> out;
  for (std::size_t len = 0; len <= n; ++len) {
    auto level = words_of_length(len);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::size_t FactorSet::total_words() const {
  std::size_t total = 0;
  for (std::size_t c : level_counts_) total += c;
  return total;
}

bool FactorSet::same_content(const FactorSet& other) const {
  if (alphabet_ != other.alphabet_ || horizon_ != other.horizon_) return false;
  if (level_counts_ != other.level_counts_) return false;
  for (std::size_t n = 0; n <= horizon_; ++n)
    if (words_of_length(n) != other.words_of_length(n)) return false;
  return true;
}

bool FactorSet::is_factorial() const {
  for (std::size_t n = 1; n <= horizon_; ++n) {
    for (const Word& w : words_of_length(n)) {
      // Prefix-closure is structural in a trie; checking the one-letter
      // suffix drop of every word covers all factors inductively.
      if (walk(w.suffix(w.size() - 1)) < 0) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Builder

FactorSet::Builder::Builder(Alphabet alphabet, std::size_t horizon) {
  set_.alphabet_ = std::move(alphabet);
  set_.horizon_ = horizon;
  set_.nodes_.push_back(Node{std::vector<std::int32_t>(set_.alphabet_.size(), -1)});
  set_.level_counts_.assign(horizon + 1, 0);
  set_.level_counts_[0] = 1;  // the empty word
}

void FactorSet::Builder::insert_path(const Word& w, std::size_t start, std::size_t len) {
  std::int32_t node = 0;
  for (std::size_t i = 0; i < len; ++i) {
    Letter a = w[start + i];
    if (a < 0 || static_cast<std::size_t>(a) >= set_.alphabet_.size())
      throw Error("word uses a letter outside the set's alphabet");
    std::int32_t next = set_.nodes_[static_cast<std::size_t>(node)].child[static_cast<std::size_t>(a)];
    if (next < 0) {
      next = static_cast<std::int32_t>(set_.nodes_.size());
      set_.nodes_.push_back(Node{std::vector<std::int32_t>(set_.alphabet_.size(), -1)});
      set_.nodes_[static_cast<std::size_t>(node)].child[static_cast<std::size_t>(a)] = next;
      set_.level_counts_[i + 1] += 1;
    }
    node = next;
  }
}

void FactorSet::Builder::add_factors(const Word& w) {
  for (std::size_t start = 0; start < w.size(); ++start)
    insert_path(w, start, std::min(set_.horizon_, w.size() - start));
}

void FactorSet::Builder::add_word(const Word& w) {
  if (w.size() > set_.horizon_)
    throw HorizonError("word longer than the set's horizon", w.size(), set_.horizon_);
  insert_path(w, 0, w.size());
}

FactorSet FactorSet::Builder::finish(bool certified, std::string provenance) {
  set_.certified_ = certified;
  set_.provenance_ = std::move(provenance);
  return std::move(set_);
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

FactorSet factors_of_text(const Alphabet& alphabet, const Word& text, std::size_t horizon,
                          bool certified, std::string provenance) {
  FactorSet::Builder b(alphabet, horizon);
  b.add_factors(text);
  return b.finish(certified, std::move(provenance));
}

}  // namespace

FactorSet factor_set_of_fixpoint(const Morphism& m, Letter seed,
                                 const std::optional<Morphism>& post_image,
                                 std::size_t horizon) {
  if (!m.prolongable_on(seed))
    throw Error("morphism is not prolongable on '" + m.source().symbol(seed) + "'");
  if (post_image) {
    if (post_image->source() != m.target())
      throw Error("post image source alphabet must match the morphism alphabet");
    if (!post_image->nonerasing()) throw Error("post image must be nonerasing");
  }
  const Alphabet& out_alphabet = post_image ? post_image->target() : m.target();
  std::string provenance = "fixpoint of morphism at '" + m.source().symbol(seed) + "'";
  if (post_image) provenance += " with post image";

  Word iterate({seed});
  std::optional<FactorSet> previous;
  Word previous_text;
  for (std::size_t k = 0; k < kStabilizationIterationCap; ++k) {
    iterate = m.apply(iterate);
    Word text = post_image ? post_image->apply(iterate) : iterate;
    FactorSet current = factors_of_text(out_alphabet, text, horizon, false, provenance);
    if (previous && previous->same_content(current) && previous_text.size() >= 4 * horizon)
      return factors_of_text(out_alphabet, text, horizon, true, provenance);
    previous = std::move(current);
    previous_text = std::move(text);
  }
  throw Error("factor set did not stabilize within the iteration cap");
}

FactorSet factor_set_of_words(const Alphabet& alphabet, const std::vector<Word>& words,
                              std::size_t horizon) {
  FactorSet::Builder b(alphabet, horizon);
  for (const Word& w : words) b.add_factors(w);
  return b.finish(true, "factor closure of an explicit word family");
}

ComplexityProfile complexity_profile(const FactorSet& s) {
  ComplexityProfile out;
  out.p = s.level_counts();
  for (std::size_t n = 0; n + 1 < out.p.size(); ++n)
    out.s.push_back(static_cast<long long>(out.p[n + 1]) - static_cast<long long>(out.p[n]));
  for (std::size_t n = 0; n + 1 < out.s.size(); ++n) out.b.push_back(out.s[n + 1] - out.s[n]);
  return out;
}

namespace {

std::vector<Word> scan_return_words(const Word& text, const Word& w) {
  auto occurrences = w.occurrences_in(text);
  if (occurrences.size() < 2)
    throw Error(occurrences.empty() ? "word does not occur in the scanned prefix"
                                    : "word occurs only once in the scanned prefix");
  std::vector<Word> out;
  for (std::size_t i = 0; i + 1 < occurrences.size(); ++i) {
    // w at positions i0 < i1 consecutive: the return word is the piece that
    // shifts one occurrence onto the next, so w·x ends with w.
    std::size_t i0 = occurrences[i], i1 = occurrences[i + 1];
    out.push_back(text.subword(i0 + w.size(), i1 - i0));
  }
  std::sort(out.begin(), out.end(), ShortlexLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Word fixpoint_text(const Morphism& m, Letter seed, const std::optional<Morphism>& post_image,
                   std::size_t min_len) {
  Word iterate({seed});
  Word text = post_image ? post_image->apply(iterate) : iterate;
  std::size_t iter = 0;
  while (text.size() < min_len) {
    if (++iter > kStabilizationIterationCap)
      throw Error("fixpoint iteration cap reached before the requested scan length");
    Word next = m.apply(iterate);
    if (next.size() <= iterate.size()) throw Error("fixpoint iterates stopped growing");
    iterate = std::move(next);
    text = post_image ? post_image->apply(iterate) : iterate;
  }
  return text;
}

}  // namespace

ReturnWords return_words(const Morphism& m, Letter seed,
                         const std::optional<Morphism>& post_image, const Word& w,
                         std::size_t scan_len) {
  if (w.empty()) throw Error("return words require a nonempty word");
  if (!m.prolongable_on(seed))
    throw Error("morphism is not prolongable on '" + m.source().symbol(seed) + "'");
  if (scan_len == 0) throw Error("scan length must be positive");
  Word text = fixpoint_text(m, seed, post_image, scan_len);
  Word doubled = fixpoint_text(m, seed, post_image, 2 * scan_len);
  ReturnWords out;
  out.words = scan_return_words(text, w);
  out.complete = out.words == scan_return_words(doubled, w);
  out.scan_len = scan_len;
  return out;
}

std::vector<RecurrenceWitness> uniform_recurrence_report(const FactorSet& s, std::size_t up_to) {
  if (up_to >= s.horizon())
    throw HorizonError("recurrence report needs words strictly shorter than the horizon",
                       up_to + 1, s.horizon());
  std::vector<RecurrenceWitness> out;
  for (const Word& u : s.words_up_to(up_to)) {
    RecurrenceWitness entry{u, std::nullopt};
    for (std::size_t n = u.size(); n <= s.horizon(); ++n) {
      bool everywhere = true;
      for (const Word& long_word : s.words_of_length(n)) {
        if (!u.is_factor_of(long_word)) {
          everywhere = false;
          break;
        }
      }
      if (everywhere) {
        entry.witness_length = n;
        break;
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace wordlab
