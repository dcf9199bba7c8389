#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "icc/types.hpp"

namespace icc {

/// Ordered list of distinct symbol tokens.
///
/// Product alphabets remember their factors: the symbol (s_0, ..., s_{k-1})
/// is stored at the mixed-radix index s_0 * |A_1| * ... + s_{k-1}, and its
/// token is the factor tokens joined with ','.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> tokens);

  static Alphabet product(const std::vector<Alphabet>& factors);
  static Alphabet product(const Alphabet& a, const Alphabet& b) { return product({a, b}); }
  static Alphabet power(const Alphabet& a, int n);
  /// Digits "0", "1", ..., as tokens.
  static Alphabet digits(int count);

  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const std::string& token(Symbol s) const { return tokens_.at(s); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  /// Throws InputError for unknown tokens.
  Symbol index(std::string_view token) const;
  std::optional<Symbol> find(std::string_view token) const;

  bool is_product() const { return !factors_.empty(); }
  const std::vector<Alphabet>& factors() const { return factors_; }
  std::size_t arity() const { return factors_.empty() ? 1 : factors_.size(); }

  /// k-th coordinate of a product symbol.
  Symbol component(Symbol s, std::size_t k) const;
  std::vector<Symbol> components(Symbol s) const;
  Symbol combine(std::span<const Symbol> parts) const;

  std::string render(WordView w) const;

  bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Symbol> lookup_;
  std::vector<Alphabet> factors_;
  std::vector<std::size_t> strides_;
};

/// Maps every symbol of a word through Alphabet::component.
Word project_word(const Alphabet& alphabet, WordView w, std::size_t k);

}  // namespace icc
