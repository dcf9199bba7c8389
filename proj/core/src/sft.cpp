#include "icc/sft.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace icc {

namespace {

void require_symbols(const Alphabet& alphabet, WordView w) {
  for (Symbol s : w) {
    if (s >= alphabet.size()) throw InputError("symbol index out of range for alphabet");
  }
}

}  // namespace

SftPresentation SftPresentation::from_allowed_words(Alphabet alphabet, int window, std::vector<Word> words) {
  if (window < 1) throw InputError("window must be >= 1");
  if (alphabet.empty()) throw InputError("alphabet must be nonempty");
  const std::size_t k = static_cast<std::size_t>(window);
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  for (const auto& w : words) {
    if (w.size() != k) throw InputError("allowed word length differs from window");
    require_symbols(alphabet, w);
  }

  // candidate vertices, then recursive removal of sources and sinks
  std::map<Word, std::size_t> vid;
  for (const auto& w : words) {
    vid.emplace(Word(w.begin(), w.end() - 1), 0);
    vid.emplace(Word(w.begin() + 1, w.end()), 0);
  }
  std::size_t next = 0;
  for (auto& [word, id] : vid) id = next++;
  struct Raw {
    std::size_t from, to;
  };
  std::vector<Raw> raw;
  raw.reserve(words.size());
  for (const auto& w : words) {
    raw.push_back({vid.at(Word(w.begin(), w.end() - 1)), vid.at(Word(w.begin() + 1, w.end()))});
  }
  std::vector<std::size_t> indeg(next, 0), outdeg(next, 0);
  std::vector<std::vector<std::size_t>> out_edges(next), in_edges(next);
  for (std::size_t e = 0; e < raw.size(); ++e) {
    ++outdeg[raw[e].from];
    ++indeg[raw[e].to];
    out_edges[raw[e].from].push_back(e);
    in_edges[raw[e].to].push_back(e);
  }
  std::vector<char> alive_v(next, 1), alive_e(raw.size(), 1);
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < next; ++v) {
    if (indeg[v] == 0 || outdeg[v] == 0) queue.push_back(v);
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (!alive_v[v]) continue;
    alive_v[v] = 0;
    auto kill = [&](std::size_t e) {
      if (!alive_e[e]) return;
      alive_e[e] = 0;
      const auto [from, to] = raw[e];
      if (--outdeg[from] == 0 && alive_v[from]) queue.push_back(from);
      if (--indeg[to] == 0 && alive_v[to]) queue.push_back(to);
    };
    for (std::size_t e : out_edges[v]) kill(e);
    for (std::size_t e : in_edges[v]) kill(e);
  }

  SftPresentation out;
  out.alphabet_ = std::move(alphabet);
  out.window_ = window;
  std::vector<std::size_t> renumber(next, 0);
  for (const auto& [word, id] : vid) {
    if (alive_v[id]) {
      renumber[id] = out.vertices_.size();
      out.vertices_.push_back(word);
    }
  }
  for (std::size_t e = 0; e < raw.size(); ++e) {
    if (!alive_e[e]) continue;
    out.edges_.push_back({renumber[raw[e].from], renumber[raw[e].to], words[e].back()});
    out.edge_set_.insert(words[e]);
  }
  std::sort(out.edges_.begin(), out.edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.from, a.label, a.to) < std::tie(b.from, b.label, b.to);
  });
  for (const auto& v : out.vertices_) {
    for (std::size_t len = 0; len <= v.size(); ++len) out.vertex_prefixes_.insert(Word(v.begin(), v.begin() + len));
  }
  return out;
}

SftPresentation SftPresentation::from_extension_check(Alphabet alphabet, int window, const ExtensionCheck& check,
                                                      std::size_t guard) {
  if (window < 1) throw InputError("window must be >= 1");
  const std::size_t k = static_cast<std::size_t>(window);
  const Symbol q = static_cast<Symbol>(alphabet.size());
  std::vector<Word> accepted;
  Word prefix;
  prefix.reserve(k);
  std::size_t visited = 0;
  // depth-first over prefixes; a rejected prefix prunes its subtree
  std::vector<Symbol> next_symbol{0};
  while (!next_symbol.empty()) {
    if (next_symbol.back() == q) {
      next_symbol.pop_back();
      if (!prefix.empty()) prefix.pop_back();
      continue;
    }
    const Symbol s = next_symbol.back()++;
    prefix.push_back(s);
    if (++visited > guard) throw GuardError("SFT construction exceeded the size guard");
    if (!check(prefix)) {
      prefix.pop_back();
      continue;
    }
    if (prefix.size() == k) {
      accepted.push_back(prefix);
      prefix.pop_back();
      continue;
    }
    next_symbol.push_back(0);
  }
  return from_allowed_words(std::move(alphabet), window, std::move(accepted));
}

Word SftPresentation::edge_word(const Edge& e) const {
  Word w = vertices_[e.from];
  w.push_back(e.label);
  return w;
}

bool SftPresentation::admits(WordView w) const {
  const std::size_t k = static_cast<std::size_t>(window_);
  if (empty()) return false;
  if (w.size() < k) return vertex_prefixes_.contains(Word(w.begin(), w.end()));
  Word window(k);
  for (std::size_t i = 0; i + k <= w.size(); ++i) {
    std::copy(w.begin() + i, w.begin() + i + k, window.begin());
    if (!edge_set_.contains(window)) return false;
  }
  return true;
}

SftPresentation SftPresentation::recode(int window) const {
  if (window < window_) throw InputError("recoding window must not shrink");
  if (window == window_) return *this;
  // a word of the larger window is allowed iff all its k-windows are edges
  const std::size_t k = static_cast<std::size_t>(window_);
  return from_extension_check(alphabet_, window, [this, k](WordView p) {
    if (p.size() < k) return vertex_prefixes_.contains(Word(p.begin(), p.end()));
    return edge_set_.contains(Word(p.end() - static_cast<long>(k), p.end()));
  });
}

std::vector<Word> SftPresentation::words(std::size_t n, std::size_t guard) const {
  std::vector<Word> out;
  if (empty()) return out;
  const std::size_t k = static_cast<std::size_t>(window_);
  if (n + 1 < k) {
    std::set<Word> prefixes;
    for (const auto& v : vertices_) prefixes.insert(Word(v.begin(), v.begin() + static_cast<long>(n)));
    return {prefixes.begin(), prefixes.end()};
  }
  std::vector<std::vector<std::size_t>> out_edges(vertices_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) out_edges[edges_[e].from].push_back(e);
  const std::size_t steps = n - (k - 1);
  for (std::size_t v0 = 0; v0 < vertices_.size(); ++v0) {
    Word w = vertices_[v0];
    // explicit stack of (vertex, next outgoing index)
    std::vector<std::pair<std::size_t, std::size_t>> stack{{v0, 0}};
    while (!stack.empty()) {
      if (stack.size() - 1 == steps) {
        out.push_back(w);
        if (out.size() > guard) throw GuardError("word enumeration exceeded the size guard");
        stack.pop_back();
        if (!stack.empty()) w.pop_back();
        continue;
      }
      auto& [v, pos] = stack.back();
      if (pos == out_edges[v].size()) {
        stack.pop_back();
        if (!stack.empty()) w.pop_back();
        continue;
      }
      const Edge& e = edges_[out_edges[v][pos++]];
      w.push_back(e.label);
      stack.push_back({e.to, 0});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SftPresentation intersect_constraints(const Alphabet& alphabet, const std::vector<ShiftConstraint>& constraints,
                                      std::size_t guard) {
  int window = 1;
  for (const auto& c : constraints) {
    if (c.symbol_map.size() != alphabet.size()) throw std::invalid_argument("constraint symbol map size mismatch");
    window = std::max(window, c.shift->window());
  }
  // any empty constituent empties the intersection
  for (const auto& c : constraints) {
    if (c.shift->empty()) return SftPresentation::from_allowed_words(alphabet, window, {});
  }
  Word scratch;
  return SftPresentation::from_extension_check(
      alphabet, window,
      [&](WordView p) {
        for (const auto& c : constraints) {
          const std::size_t kc = static_cast<std::size_t>(c.shift->window());
          const std::size_t from = p.size() < kc ? 0 : p.size() - kc;
          scratch.clear();
          for (std::size_t i = from; i < p.size(); ++i) scratch.push_back(c.symbol_map[p[i]]);
          if (!c.shift->admits(scratch)) return false;
        }
        return true;
      },
      guard);
}

SftPresentation build_sft(const Alphabet& alphabet, const std::vector<Word>& forbidden) {
  std::size_t window = 1;
  std::vector<std::vector<Word>> by_length;
  for (const auto& f : forbidden) {
    if (f.empty()) throw InputError("the empty word cannot be forbidden");
    require_symbols(alphabet, f);
    window = std::max(window, f.size());
    if (by_length.size() <= f.size()) by_length.resize(f.size() + 1);
    by_length[f.size()].push_back(f);
  }
  return SftPresentation::from_extension_check(alphabet, static_cast<int>(window), [&](WordView p) {
    for (std::size_t len = 1; len < by_length.size() && len <= p.size(); ++len) {
      for (const auto& f : by_length[len]) {
        if (std::equal(f.begin(), f.end(), p.end() - static_cast<long>(len))) return false;
      }
    }
    return true;
  });
}

SftPresentation build_sft(const Alphabet& alphabet, const std::vector<std::vector<std::string>>& forbidden) {
  std::vector<Word> words;
  for (const auto& tokens : forbidden) {
    Word w;
    for (const auto& t : tokens) w.push_back(alphabet.index(t));
    words.push_back(std::move(w));
  }
  return build_sft(alphabet, words);
}

SftPresentation full_shift(const Alphabet& alphabet) { return build_sft(alphabet, std::vector<Word>{}); }

SftPresentation golden_mean_shift() { return build_sft(Alphabet::digits(2), std::vector<Word>{{1, 1}}); }

BigCount count_words(const SftPresentation& shift, std::size_t n) {
  if (shift.empty()) return 0;
  const std::size_t k = static_cast<std::size_t>(shift.window());
  if (n + 1 < k) return static_cast<long>(shift.words(n).size());
  // for n >= k-1, length-n factors biject with paths of n-k+1 edges
  std::vector<BigCount> paths(shift.vertices().size(), 1), next(shift.vertices().size());
  for (std::size_t step = 0; step + (k - 1) < n; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (const auto& e : shift.edges()) next[e.from] += paths[e.to];
    paths.swap(next);
  }
  BigCount total = 0;
  for (const auto& p : paths) total += p;
  return total;
}

std::vector<Symbol> component_map(const Alphabet& product, std::size_t k) {
  std::vector<Symbol> m(product.size());
  for (std::size_t s = 0; s < m.size(); ++s) m[s] = product.component(static_cast<Symbol>(s), k);
  return m;
}

std::vector<Symbol> factor_map(const Alphabet& product, const std::vector<std::size_t>& keep, const Alphabet& target) {
  std::vector<Symbol> m(product.size());
  std::vector<Symbol> parts(keep.size());
  for (std::size_t s = 0; s < m.size(); ++s) {
    for (std::size_t i = 0; i < keep.size(); ++i) parts[i] = product.component(static_cast<Symbol>(s), keep[i]);
    m[s] = target.combine(parts);
  }
  return m;
}

SftPresentation product_shift(const SftPresentation& a, const SftPresentation& b) {
  const Alphabet pair = Alphabet::product(a.alphabet(), b.alphabet());
  return intersect_constraints(pair, {{&a, component_map(pair, 0)}, {&b, component_map(pair, 1)}});
}

SftPresentation intersect(const SftPresentation& a, const SftPresentation& b) {
  if (!(a.alphabet() == b.alphabet())) throw InputError("intersection needs identical alphabets");
  std::vector<Symbol> id(a.alphabet().size());
  for (std::size_t s = 0; s < id.size(); ++s) id[s] = static_cast<Symbol>(s);
  return intersect_constraints(a.alphabet(), {{&a, id}, {&b, id}});
}

}  // namespace icc
