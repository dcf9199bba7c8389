#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace icc {

/// Index of a token inside an Alphabet.
using Symbol = std::uint32_t;

/// A finite word, stored as alphabet indices.
using Word = std::vector<Symbol>;
using WordView = std::span<const Symbol>;

/// Exact counts of words can exceed 64 bits (c_n of a full 8-shift at n = 64).
using BigCount = boost::multiprecision::cpp_int;

/// Malformed or inconsistent input: a symbol outside the alphabet, an invalid
/// cover, an inadmissible expansion, ...
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size guard was exceeded. Operations fail fast instead of exhausting memory.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default size guard for constructed graphs, automata and enumerations.
inline constexpr std::size_t kDefaultStateGuard = std::size_t{1} << 21;

/// log2 of an exact count; -inf for zero.
double log2_count(const BigCount& c);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Symbol s : w) {
      h ^= s + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace icc
