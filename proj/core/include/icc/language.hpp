#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "icc/alphabet.hpp"
#include "icc/sofic.hpp"

namespace icc {

/// A factorial language given by a membership predicate. An optional
/// deterministic recognizer reads words left to right; step returns nullopt
/// once the word read so far is outside the language. With a recognizer,
/// uw is in the language iff reading w from u's state never fails.
struct LanguageOracle {
  using State = std::vector<std::int64_t>;
  struct Recognizer {
    State initial;
    std::function<std::optional<State>(const State&, Symbol)> step;
  };

  Alphabet alphabet;
  std::function<bool(WordView)> contains;
  std::optional<Recognizer> recognizer;
};

/// Factor language of a sofic shift; the recognizer walks its subset automaton.
LanguageOracle oracle_from_sofic(const SoficPresentation& shift);

/// Words over {a, b, c, d} with no factor c a^j d b^j c, j >= 0.
LanguageOracle counterexample_oracle();

/// For each length l = 0..k, the number of distinct depth-m residual profiles
/// {w : |w| <= m, uw in L} over the words u of length l in L. Uses the
/// recognizer when present and exhaustive enumeration otherwise.
std::vector<std::size_t> residual_profile_count(const LanguageOracle& oracle, int k, int m,
                                                std::size_t guard = kDefaultStateGuard);

/// Exhaustive route, ignoring any recognizer.
std::vector<std::size_t> residual_profile_count_exhaustive(const LanguageOracle& oracle, int k, int m,
                                                           std::size_t guard = kDefaultStateGuard);

}  // namespace icc
