#pragma once

#include <functional>
#include <optional>
#include <unordered_map>

#include "icc/alphabet.hpp"
#include "icc/sft.hpp"
#include "icc/sofic.hpp"

namespace icc {

/// Sliding block code with memory and anticipation w: the output at i is
/// rule(x[i-w .. i+w]).
class BlockCode {
 public:
  /// Returns nullopt where the rule is undefined.
  using Rule = std::function<std::optional<Symbol>(WordView window)>;

  BlockCode() = default;
  /// Tabulates `rule` on every (2w+1)-word over `source`.
  static BlockCode from_function(Alphabet source, Alphabet target, int radius, const Rule& rule,
                                 std::size_t guard = kDefaultStateGuard);
  static BlockCode from_table(Alphabet source, Alphabet target, int radius,
                              std::unordered_map<Word, Symbol, WordHash> table);
  static BlockCode identity(const Alphabet& alphabet);

  const Alphabet& source() const { return source_; }
  const Alphabet& target() const { return target_; }
  int radius() const { return radius_; }
  std::size_t span() const { return 2 * static_cast<std::size_t>(radius_) + 1; }

  std::optional<Symbol> apply(WordView window) const;
  /// Image of a finite word; |result| = |w| - 2w. Throws InputError where the
  /// rule is undefined.
  Word apply_word(WordView w) const;

 private:
  Alphabet source_;
  Alphabet target_;
  int radius_ = 0;
  std::unordered_map<Word, Symbol, WordHash> table_;
};

/// Presentation of the image shift. Vertices are the max(2w, k-1)-windows of
/// the source; edges carry the rule's output. Throws InputError if the rule is
/// undefined on an admissible window.
SoficPresentation apply_block_code(const BlockCode& code, const SftPresentation& shift);
SoficPresentation apply_block_code(const BlockCode& code, const SoficPresentation& shift,
                                   std::size_t guard = kDefaultStateGuard);

}  // namespace icc
