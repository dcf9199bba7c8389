#pragma once

#include <optional>
#include <vector>

#include "icc/alphabet.hpp"
#include "icc/sft.hpp"
#include "icc/types.hpp"

namespace icc {

/// Edge-labelled directed graph; its bi-infinite label sequences form a sofic
/// shift. Construction trims sources and sinks recursively, so every finite
/// label path is a factor of the shift.
class SoficPresentation {
 public:
  struct Edge {
    std::size_t from;
    Symbol label;
    std::size_t to;
    auto operator<=>(const Edge&) const = default;
  };

  SoficPresentation() = default;
  SoficPresentation(Alphabet alphabet, std::size_t num_states, std::vector<Edge> edges);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return num_states_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool trimmed() const { return true; }
  bool empty() const { return num_states_ == 0; }

  /// Relabels every edge through `map` into `target`.
  SoficPresentation relabel(const Alphabet& target, const std::vector<Symbol>& map) const;

 private:
  Alphabet alphabet_;
  std::size_t num_states_ = 0;
  std::vector<Edge> edges_;
};

SoficPresentation sofic_from_sft(const SftPresentation& shift);

/// Keeps the listed components of a product-alphabet presentation. With a
/// single kept component the result is over that factor alphabet.
SoficPresentation project(const SoficPresentation& shift, const std::vector<std::size_t>& keep);
SoficPresentation project(const SftPresentation& shift, const std::vector<std::size_t>& keep);

/// Complete deterministic automaton without its dead state; missing
/// transitions are -1. State 0 is the start state when the automaton is
/// nonempty. Every state accepts.
struct Dfa {
  std::size_t alphabet_size = 0;
  std::size_t num_states = 0;
  std::vector<long> next;

  long step(std::size_t state, Symbol s) const { return next[state * alphabet_size + s]; }
  bool operator==(const Dfa&) const = default;
};

/// Subset construction on the factor automaton (all states initial and final).
Dfa determinize(const SoficPresentation& shift, std::size_t guard = kDefaultStateGuard);
/// Minimal automaton with states renumbered in breadth-first order from the
/// start state, visiting symbols in alphabet order. Equal languages give
/// identical canonical automata.
Dfa minimize(const Dfa& dfa);
Dfa canonical_automaton(const SoficPresentation& shift, std::size_t guard = kDefaultStateGuard);

/// True iff both presentations have the same factor language (hence the same
/// bi-infinite shift).
bool sofic_equal(const SoficPresentation& a, const SoficPresentation& b, std::size_t guard = kDefaultStateGuard);

/// Shortest word in exactly one of the two factor languages, if any.
std::optional<Word> distinguishing_word(const SoficPresentation& a, const SoficPresentation& b,
                                        std::size_t guard = kDefaultStateGuard);
/// Shortest factor of `sub` that is not a factor of `super`, if any.
std::optional<Word> containment_counterexample(const SoficPresentation& super, const SoficPresentation& sub,
                                               std::size_t guard = kDefaultStateGuard);
bool sofic_contains(const SoficPresentation& super, const SoficPresentation& sub,
                    std::size_t guard = kDefaultStateGuard);

BigCount count_words(const SoficPresentation& shift, std::size_t n, std::size_t guard = kDefaultStateGuard);
/// Distinct factors of length n, sorted.
std::vector<Word> factors(const SoficPresentation& shift, std::size_t n, std::size_t guard = kDefaultStateGuard);
bool admits(const SoficPresentation& shift, WordView w);

/// Sofic analogue of ShiftConstraint.
struct SoficConstraint {
  const SoficPresentation* shift;
  std::vector<Symbol> symbol_map;
};

/// Presentation of the words whose images under every constraint's map lie in
/// that constraint's shift (graph product, trimmed after each factor).
SoficPresentation intersect_sofic(const Alphabet& alphabet, const std::vector<SoficConstraint>& constraints,
                                  std::size_t guard = kDefaultStateGuard);

/// Binary sequences whose maximal blocks of 1s between two 0s have even length.
SoficPresentation even_shift();

}  // namespace icc
