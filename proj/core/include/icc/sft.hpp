#pragma once

#include <functional>
#include <unordered_set>
#include <vector>

#include "icc/alphabet.hpp"
#include "icc/types.hpp"

namespace icc {

/// A shift of finite type as a de Bruijn graph.
///
/// For window k the vertices are the allowed (k-1)-words and the edges the
/// allowed k-words, joining their (k-1)-prefix to their (k-1)-suffix and
/// labelled by their last symbol. Presentations are always trimmed: every
/// vertex lies on a bi-infinite path, so the bi-infinite paths biject with the
/// points of the shift and every finite path spells a factor.
class SftPresentation {
 public:
  struct Edge {
    std::size_t from;
    std::size_t to;
    Symbol label;
  };

  /// Receives a prefix of a candidate window-word and rejects it if a
  /// constraint ending at its last position fails. Earlier positions have
  /// already been checked.
  using ExtensionCheck = std::function<bool(WordView prefix)>;

  SftPresentation() = default;

  static SftPresentation from_allowed_words(Alphabet alphabet, int window, std::vector<Word> words);
  static SftPresentation from_extension_check(Alphabet alphabet, int window, const ExtensionCheck& check,
                                              std::size_t guard = kDefaultStateGuard);

  const Alphabet& alphabet() const { return alphabet_; }
  int window() const { return window_; }
  const std::vector<Word>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool trimmed() const { return true; }
  bool empty() const { return edges_.empty(); }

  Word edge_word(const Edge& e) const;
  bool is_edge_word(WordView w) const { return edge_set_.contains(Word(w.begin(), w.end())); }
  /// True iff w is a factor of some point of the shift.
  bool admits(WordView w) const;
  /// Same language presented with a larger window (higher block recoding).
  SftPresentation recode(int window) const;
  /// Distinct factors of length n, sorted.
  std::vector<Word> words(std::size_t n, std::size_t guard = kDefaultStateGuard) const;

 private:
  friend struct SftAccess;
  Alphabet alphabet_;
  int window_ = 1;
  std::vector<Word> vertices_;
  std::vector<Edge> edges_;
  std::unordered_set<Word, WordHash> edge_set_;
  // every prefix (lengths 0..k-1) of a vertex word
  std::unordered_set<Word, WordHash> vertex_prefixes_;
};

/// A constituent of an intersection: outer symbols are mapped through
/// symbol_map before being checked against `shift`.
struct ShiftConstraint {
  const SftPresentation* shift;
  std::vector<Symbol> symbol_map;
};

/// The SFT of words whose images under every constraint's map lie in that
/// constraint's shift. Window is the largest constituent window.
SftPresentation intersect_constraints(const Alphabet& alphabet, const std::vector<ShiftConstraint>& constraints,
                                      std::size_t guard = kDefaultStateGuard);

/// Shift avoiding every forbidden word. Window is max(1, longest forbidden word).
SftPresentation build_sft(const Alphabet& alphabet, const std::vector<Word>& forbidden);
/// Convenience overload: each forbidden word is a list of tokens.
SftPresentation build_sft(const Alphabet& alphabet, const std::vector<std::vector<std::string>>& forbidden);

SftPresentation full_shift(const Alphabet& alphabet);
SftPresentation golden_mean_shift();

/// Exact number c_n of distinct length-n factors.
BigCount count_words(const SftPresentation& shift, std::size_t n);

/// Points are pairs of points; alphabet is the product alphabet.
SftPresentation product_shift(const SftPresentation& a, const SftPresentation& b);
/// Intersection of two shifts over the same alphabet.
SftPresentation intersect(const SftPresentation& a, const SftPresentation& b);

/// Symbol map sending each symbol of `product` to its k-th component.
std::vector<Symbol> component_map(const Alphabet& product, std::size_t k);
/// Symbol map keeping the listed components, combined in `target`.
std::vector<Symbol> factor_map(const Alphabet& product, const std::vector<std::size_t>& keep, const Alphabet& target);

}  // namespace icc
