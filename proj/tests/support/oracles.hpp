#pragma once

// Slow, independent reference computations. Nothing here calls the graph,
// automaton or cover code under test.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "icc/relation.hpp"
#include "icc/types.hpp"
#include "icc/wang.hpp"

namespace oracle {

using icc::Symbol;
using icc::Word;
using Rational = boost::multiprecision::cpp_rational;

/// A shift given by forbidden words over {0, ..., k-1}.
struct ForbiddenShift {
  int k = 2;
  std::vector<Word> forbidden;

  int longest() const;
  bool locally_admissible(const Word& w) const;
};

/// Factors of length n: locally admissible words extendable far enough in
/// both directions that a cycle must be reached.
std::set<Word> factor_words(const ForbiddenShift& s, std::size_t n);

/// Words w of length p whose periodic repetition avoids every forbidden word.
std::uint64_t periodic_points(const ForbiddenShift& s, std::size_t p);

/// log2(P_p / V) / p <= H <= log2(c_n) / n with V = k^(L-1).
struct EntropyBracket {
  double lower;
  double upper;
};
EntropyBracket entropy_bracket(const ForbiddenShift& s, std::size_t n, std::size_t p);

/// Random forbidden lists over a small alphabet.
ForbiddenShift random_shift(std::mt19937_64& rng, int max_k, int max_len, int max_words);

/// Maximal 1-rectangles by closing every row subset (rows <= 20).
std::set<icc::Rectangle> maximal_rectangles(const icc::RelationMatrix& r);

/// Minimum cover by iterative deepening over maximal rectangles.
std::size_t min_cover(const icc::RelationMatrix& r, std::size_t limit = 16);

/// Exact LP value of the fractional cover number, by a rational simplex on
/// the packing dual with Bland's rule.
Rational fractional_cover(const icc::RelationMatrix& r);

/// Root of x^p - d_1 x^(p-1) - ... - d_p above 1 by Newton's method.
double newton_beta(const std::vector<int>& digits);

/// Greedy expansion digits of 1 in base beta, stopping at a zero remainder
/// (up to 1e-9) or after max_digits.
std::vector<int> greedy_expansion(double beta, std::size_t max_digits);

/// Every suffix of w is lexicographically at most the matching prefix of the
/// periodic sequence `cycle`^inf.
bool dominated_by(const Word& w, const Word& cycle);

/// x_i <= y_i pointwise: y is free where x is 0 and forced where x is 1.
double leq_conditional(const Word& x_period);

/// Words over a, b, c, d (0..3) containing a factor c a^j d b^j c.
bool has_counterexample_factor(const Word& w);

/// All valid tilings of a cols x rows rectangle, row 0 at the bottom,
/// enumerated cell by cell. Tiles are indices into the set.
std::vector<std::vector<std::vector<std::size_t>>> tilings(const icc::TileSet& t, int cols, int rows);

}  // namespace oracle
