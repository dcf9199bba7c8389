#include "icc/alphabet.hpp"

#include <cmath>
#include <limits>

namespace icc {

double log2_count(const BigCount& c) {
  if (c <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = boost::multiprecision::msb(c);
  if (bits < 60) return std::log2(c.convert_to<double>());
  // keep the top 60 bits; the discarded tail is below double precision
  const BigCount top = c >> (bits - 59);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 59);
}

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw InputError("alphabet must be nonempty");
  lookup_.reserve(tokens_.size());
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (!lookup_.emplace(tokens_[i], static_cast<Symbol>(i)).second) {
      throw InputError("duplicate alphabet token '" + tokens_[i] + "'");
    }
  }
}

Alphabet Alphabet::product(const std::vector<Alphabet>& factors) {
  if (factors.empty()) throw InputError("product of zero alphabets");
  std::size_t total = 1;
  for (const auto& f : factors) {
    if (f.empty()) throw InputError("product with an empty alphabet");
    if (total > std::numeric_limits<Symbol>::max() / f.size()) {
      throw GuardError("product alphabet too large");
    }
    total *= f.size();
  }
  std::vector<std::string> tokens;
  tokens.reserve(total);
  std::vector<std::size_t> digit(factors.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    std::string t;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) t += ',';
      t += factors[k].token(static_cast<Symbol>(digit[k]));
    }
    tokens.push_back(std::move(t));
    for (std::size_t k = factors.size(); k-- > 0;) {
      if (++digit[k] < factors[k].size()) break;
      digit[k] = 0;
    }
  }
  Alphabet out;
  out.tokens_ = std::move(tokens);
  for (std::size_t i = 0; i < out.tokens_.size(); ++i) {
    // nested products may collide on joined tokens; first one wins for lookup
    out.lookup_.emplace(out.tokens_[i], static_cast<Symbol>(i));
  }
  out.factors_ = factors;
  out.strides_.assign(factors.size(), 1);
  for (std::size_t k = factors.size() - 1; k-- > 0;) {
    out.strides_[k] = out.strides_[k + 1] * factors[k + 1].size();
  }
  return out;
}

Alphabet Alphabet::power(const Alphabet& a, int n) {
  if (n < 1) throw InputError("alphabet power needs n >= 1");
  return product(std::vector<Alphabet>(static_cast<std::size_t>(n), a));
}

Alphabet Alphabet::digits(int count) {
  std::vector<std::string> t;
  for (int i = 0; i < count; ++i) t.push_back(std::to_string(i));
  return Alphabet(std::move(t));
}

Symbol Alphabet::index(std::string_view token) const {
  auto s = find(token);
  if (!s) throw InputError("symbol '" + std::string(token) + "' is not in the alphabet");
  return *s;
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
  auto it = lookup_.find(std::string(token));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::component(Symbol s, std::size_t k) const {
  if (factors_.empty()) {
    if (k != 0) throw std::out_of_range("component of a non-product alphabet");
    return s;
  }
  return static_cast<Symbol>((s / strides_.at(k)) % factors_[k].size());
}

std::vector<Symbol> Alphabet::components(Symbol s) const {
  std::vector<Symbol> out(arity());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = component(s, k);
  return out;
}

Symbol Alphabet::combine(std::span<const Symbol> parts) const {
  if (factors_.empty()) {
    if (parts.size() != 1) throw std::invalid_argument("combine arity mismatch");
    return parts[0];
  }
  if (parts.size() != factors_.size()) throw std::invalid_argument("combine arity mismatch");
  std::size_t s = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] >= factors_[k].size()) throw std::out_of_range("combine: component out of range");
    s += parts[k] * strides_[k];
  }
  return static_cast<Symbol>(s);
}

std::string Alphabet::render(WordView w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += is_product() ? "(" + token(w[i]) + ")" : token(w[i]);
  }
  return out;
}

Word project_word(const Alphabet& alphabet, WordView w, std::size_t k) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = alphabet.component(w[i], k);
  return out;
}

}  // namespace icc
