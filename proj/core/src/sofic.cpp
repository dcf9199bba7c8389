#include "icc/sofic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "icc/entropy.hpp"

namespace icc {

SoficPresentation::SoficPresentation(Alphabet alphabet, std::size_t num_states, std::vector<Edge> edges)
    : alphabet_(std::move(alphabet)) {
  for (const auto& e : edges) {
    if (e.from >= num_states || e.to >= num_states) throw InputError("edge endpoint out of range");
    if (e.label >= alphabet_.size()) throw InputError("edge label outside the alphabet");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<std::size_t> indeg(num_states, 0), outdeg(num_states, 0);
  std::vector<std::vector<std::size_t>> out_edges(num_states), in_edges(num_states);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    ++outdeg[edges[i].from];
    ++indeg[edges[i].to];
    out_edges[edges[i].from].push_back(i);
    in_edges[edges[i].to].push_back(i);
  }
  std::vector<char> alive_v(num_states, 1), alive_e(edges.size(), 1);
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < num_states; ++v) {
    if (indeg[v] == 0 || outdeg[v] == 0) queue.push_back(v);
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (!alive_v[v]) continue;
    alive_v[v] = 0;
    auto kill = [&](std::size_t i) {
      if (!alive_e[i]) return;
      alive_e[i] = 0;
      if (--outdeg[edges[i].from] == 0 && alive_v[edges[i].from]) queue.push_back(edges[i].from);
      if (--indeg[edges[i].to] == 0 && alive_v[edges[i].to]) queue.push_back(edges[i].to);
    };
    for (std::size_t i : out_edges[v]) kill(i);
    for (std::size_t i : in_edges[v]) kill(i);
  }
  std::vector<std::size_t> renumber(num_states, 0);
  for (std::size_t v = 0; v < num_states; ++v) {
    if (alive_v[v]) renumber[v] = num_states_++;
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (alive_e[i]) edges_.push_back({renumber[edges[i].from], edges[i].label, renumber[edges[i].to]});
  }
}

SoficPresentation SoficPresentation::relabel(const Alphabet& target, const std::vector<Symbol>& map) const {
  if (map.size() != alphabet_.size()) throw std::invalid_argument("relabel map size mismatch");
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({e.from, map[e.label], e.to});
  return SoficPresentation(target, num_states_, std::move(out));
}

SoficPresentation sofic_from_sft(const SftPresentation& shift) {
  std::vector<SoficPresentation::Edge> edges;
  edges.reserve(shift.edges().size());
  for (const auto& e : shift.edges()) edges.push_back({e.from, e.label, e.to});
  return SoficPresentation(shift.alphabet(), shift.vertices().size(), std::move(edges));
}

SoficPresentation project(const SoficPresentation& shift, const std::vector<std::size_t>& keep) {
  const Alphabet& a = shift.alphabet();
  if (!a.is_product()) throw InputError("projection needs a product alphabet");
  for (std::size_t k : keep) {
    if (k >= a.arity()) throw InputError("projection component out of range");
  }
  std::vector<Alphabet> parts;
  for (std::size_t k : keep) parts.push_back(a.factors()[k]);
  const Alphabet target = parts.size() == 1 ? parts[0] : Alphabet::product(parts);
  return shift.relabel(target, factor_map(a, keep, target));
}

SoficPresentation project(const SftPresentation& shift, const std::vector<std::size_t>& keep) {
  return project(sofic_from_sft(shift), keep);
}

Dfa determinize(const SoficPresentation& shift, std::size_t guard) {
  Dfa dfa;
  const std::size_t q = shift.alphabet().size();
  dfa.alphabet_size = q;
  if (shift.empty()) return dfa;
  std::vector<std::vector<std::vector<std::size_t>>> succ(shift.num_states(),
                                                          std::vector<std::vector<std::size_t>>(q));
  for (const auto& e : shift.edges()) succ[e.from][e.label].push_back(e.to);

  std::map<std::vector<std::size_t>, std::size_t> ids;
  std::vector<std::vector<std::size_t>> sets;
  std::vector<std::size_t> all(shift.num_states());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  ids.emplace(all, 0);
  sets.push_back(all);
  for (std::size_t cur = 0; cur < sets.size(); ++cur) {
    for (Symbol s = 0; s < q; ++s) {
      std::vector<std::size_t> target;
      for (std::size_t v : sets[cur]) {
        target.insert(target.end(), succ[v][s].begin(), succ[v][s].end());
      }
      if (target.empty()) {
        dfa.next.push_back(-1);
        continue;
      }
      std::sort(target.begin(), target.end());
      target.erase(std::unique(target.begin(), target.end()), target.end());
      auto [it, fresh] = ids.emplace(target, sets.size());
      if (fresh) {
        if (sets.size() >= guard) throw GuardError("subset construction exceeded the state guard");
        sets.push_back(std::move(target));
      }
      dfa.next.push_back(static_cast<long>(it->second));
    }
  }
  dfa.num_states = sets.size();
  return dfa;
}

namespace {

Dfa breadth_first_renumber(const Dfa& dfa) {
  Dfa out;
  out.alphabet_size = dfa.alphabet_size;
  if (dfa.num_states == 0) return out;
  std::vector<long> order(dfa.num_states, -1);
  std::vector<std::size_t> queue{0};
  order[0] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Symbol s = 0; s < dfa.alphabet_size; ++s) {
      const long t = dfa.step(queue[i], s);
      if (t >= 0 && order[static_cast<std::size_t>(t)] < 0) {
        order[static_cast<std::size_t>(t)] = static_cast<long>(queue.size());
        queue.push_back(static_cast<std::size_t>(t));
      }
    }
  }
  out.num_states = queue.size();
  out.next.assign(out.num_states * out.alphabet_size, -1);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Symbol s = 0; s < dfa.alphabet_size; ++s) {
      const long t = dfa.step(queue[i], s);
      out.next[i * out.alphabet_size + s] = t < 0 ? -1 : order[static_cast<std::size_t>(t)];
    }
  }
  return out;
}

}  // namespace

Dfa minimize(const Dfa& dfa) {
  if (dfa.num_states == 0) return dfa;
  const std::size_t n = dfa.num_states, q = dfa.alphabet_size;
  // Moore refinement; every live state accepts, the missing dead state rejects
  std::vector<std::size_t> cls(n, 0);
  std::size_t num_classes = 1;
  while (true) {
    std::map<std::vector<long>, std::size_t> signature_ids;
    std::vector<std::size_t> refined(n);
    std::vector<long> sig(q + 1);
    for (std::size_t v = 0; v < n; ++v) {
      sig[0] = static_cast<long>(cls[v]);
      for (Symbol s = 0; s < q; ++s) {
        const long t = dfa.step(v, s);
        sig[s + 1] = t < 0 ? -1 : static_cast<long>(cls[static_cast<std::size_t>(t)]);
      }
      refined[v] = signature_ids.emplace(sig, signature_ids.size()).first->second;
    }
    cls.swap(refined);
    if (signature_ids.size() == num_classes) break;
    num_classes = signature_ids.size();
  }
  Dfa quotient;
  quotient.alphabet_size = q;
  quotient.num_states = num_classes;
  quotient.next.assign(num_classes * q, -1);
  for (std::size_t v = 0; v < n; ++v) {
    for (Symbol s = 0; s < q; ++s) {
      const long t = dfa.step(v, s);
      quotient.next[cls[v] * q + s] = t < 0 ? -1 : static_cast<long>(cls[static_cast<std::size_t>(t)]);
    }
  }
  // the start class must become state 0 before renumbering
  if (cls[0] != 0) {
    Dfa swapped = quotient;
    auto remap = [&](long c) -> long {
      if (c < 0) return c;
      if (static_cast<std::size_t>(c) == cls[0]) return 0;
      if (c == 0) return static_cast<long>(cls[0]);
      return c;
    };
    for (std::size_t c = 0; c < num_classes; ++c) {
      const std::size_t src = static_cast<std::size_t>(remap(static_cast<long>(c)));
      for (Symbol s = 0; s < q; ++s) swapped.next[src * q + s] = remap(quotient.next[c * q + s]);
    }
    quotient = std::move(swapped);
  }
  return breadth_first_renumber(quotient);
}

Dfa canonical_automaton(const SoficPresentation& shift, std::size_t guard) {
  return minimize(determinize(shift, guard));
}

bool sofic_equal(const SoficPresentation& a, const SoficPresentation& b, std::size_t guard) {
  if (!(a.alphabet() == b.alphabet())) throw InputError("sofic_equal needs identical alphabets");
  return canonical_automaton(a, guard) == canonical_automaton(b, guard);
}

namespace {

// Breadth-first search over pairs of automaton states (-1 = dead). Returns the
// shortest word reaching a pair accepted by `target`.
template <typename Target>
std::optional<Word> product_search(const Dfa& a, const Dfa& b, Target target) {
  const long start_a = a.num_states ? 0 : -1;
  const long start_b = b.num_states ? 0 : -1;
  if (start_a < 0 && start_b < 0) return std::nullopt;
  if (target(start_a, start_b)) return Word{};
  if (start_a < 0 || start_b < 0) return std::nullopt;
  const std::size_t q = a.alphabet_size;
  struct Node {
    long x, y;
    std::size_t parent;
    Symbol via;
  };
  std::vector<Node> nodes{{start_a, start_b, 0, 0}};
  std::map<std::pair<long, long>, std::size_t> seen{{{start_a, start_b}, 0}};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (Symbol s = 0; s < q; ++s) {
      const long x = nodes[i].x < 0 ? -1 : a.step(static_cast<std::size_t>(nodes[i].x), s);
      const long y = nodes[i].y < 0 ? -1 : b.step(static_cast<std::size_t>(nodes[i].y), s);
      if (x < 0 && y < 0) continue;
      if (!seen.emplace(std::make_pair(x, y), nodes.size()).second) continue;
      nodes.push_back({x, y, i, s});
      if (target(x, y)) {
        Word w;
        for (std::size_t j = nodes.size() - 1; j != 0; j = nodes[j].parent) w.push_back(nodes[j].via);
        std::reverse(w.begin(), w.end());
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Word> distinguishing_word(const SoficPresentation& a, const SoficPresentation& b, std::size_t guard) {
  if (!(a.alphabet() == b.alphabet())) throw InputError("distinguishing_word needs identical alphabets");
  return product_search(determinize(a, guard), determinize(b, guard),
                        [](long x, long y) { return (x < 0) != (y < 0); });
}

std::optional<Word> containment_counterexample(const SoficPresentation& super, const SoficPresentation& sub,
                                               std::size_t guard) {
  if (!(super.alphabet() == sub.alphabet())) throw InputError("containment needs identical alphabets");
  return product_search(determinize(super, guard), determinize(sub, guard),
                        [](long x, long y) { return x < 0 && y >= 0; });
}

bool sofic_contains(const SoficPresentation& super, const SoficPresentation& sub, std::size_t guard) {
  return !containment_counterexample(super, sub, guard).has_value();
}

BigCount count_words(const SoficPresentation& shift, std::size_t n, std::size_t guard) {
  const Dfa dfa = determinize(shift, guard);
  if (dfa.num_states == 0) return 0;
  std::vector<BigCount> ways(dfa.num_states, 0), next(dfa.num_states);
  ways[0] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t v = 0; v < dfa.num_states; ++v) {
      if (ways[v] == 0) continue;
      for (Symbol s = 0; s < dfa.alphabet_size; ++s) {
        const long t = dfa.step(v, s);
        if (t >= 0) next[static_cast<std::size_t>(t)] += ways[v];
      }
    }
    ways.swap(next);
  }
  BigCount total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

std::vector<Word> factors(const SoficPresentation& shift, std::size_t n, std::size_t guard) {
  const Dfa dfa = determinize(shift, guard);
  std::vector<Word> out;
  if (dfa.num_states == 0) return out;
  Word w;
  std::vector<std::pair<std::size_t, Symbol>> stack{{0, 0}};
  while (!stack.empty()) {
    if (w.size() == n) {
      out.push_back(w);
      if (out.size() > guard) throw GuardError("factor enumeration exceeded the size guard");
      stack.pop_back();
      if (!w.empty()) w.pop_back();
      continue;
    }
    auto& [state, sym] = stack.back();
    if (sym == dfa.alphabet_size) {
      stack.pop_back();
      if (!w.empty()) w.pop_back();
      continue;
    }
    const Symbol s = sym++;
    const long t = dfa.step(state, s);
    if (t < 0) continue;
    w.push_back(s);
    stack.push_back({static_cast<std::size_t>(t), 0});
  }
  return out;
}

bool admits(const SoficPresentation& shift, WordView w) {
  if (shift.empty()) return false;
  std::vector<char> current(shift.num_states(), 1), next(shift.num_states());
  for (Symbol s : w) {
    std::fill(next.begin(), next.end(), 0);
    bool any = false;
    for (const auto& e : shift.edges()) {
      if (e.label == s && current[e.from]) {
        next[e.to] = 1;
        any = true;
      }
    }
    if (!any) return false;
    current.swap(next);
  }
  return true;
}

SoficPresentation intersect_sofic(const Alphabet& alphabet, const std::vector<SoficConstraint>& constraints,
                                  std::size_t guard) {
  std::vector<SoficPresentation::Edge> loops;
  for (Symbol s = 0; s < alphabet.size(); ++s) loops.push_back({0, s, 0});
  SoficPresentation acc(alphabet, 1, std::move(loops));
  for (const auto& c : constraints) {
    if (c.symbol_map.size() != alphabet.size()) throw std::invalid_argument("constraint symbol map size mismatch");
    const SoficPresentation& f = *c.shift;
    const std::size_t width = f.num_states();
    if (acc.num_states() * width > guard) throw GuardError("sofic product exceeded the state guard");
    std::vector<std::vector<const SoficPresentation::Edge*>> by_label(f.alphabet().size());
    for (const auto& e : f.edges()) by_label[e.label].push_back(&e);
    std::vector<SoficPresentation::Edge> edges;
    for (const auto& e : acc.edges()) {
      for (const auto* g : by_label[c.symbol_map[e.label]]) {
        edges.push_back({e.from * width + g->from, e.label, e.to * width + g->to});
        if (edges.size() > guard) throw GuardError("sofic product exceeded the edge guard");
      }
    }
    acc = SoficPresentation(alphabet, acc.num_states() * width, std::move(edges));
  }
  return acc;
}

SoficPresentation even_shift() {
  // state 0: free; state 1: inside a block of 1s of odd length so far
  return SoficPresentation(Alphabet::digits(2), 2, {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}});
}

std::string EntropyValue::to_string() const {
  if (empty_) return "-inf";
  std::ostringstream os;
  os.precision(12);
  os << bits();
  return os.str();
}

EntropyValue entropy_from_radius(const SpectralBracket& radius, bool nonempty) {
  if (!nonempty) return EntropyValue::negative_infinity();
  // nonempty integer graphs carry a cycle, so the root is at least 1
  const double lo = std::max(radius.lower, 1.0);
  const double hi = std::max(radius.upper, lo);
  return EntropyValue::from_bracket(std::log2(lo), std::log2(hi));
}

EntropyValue entropy(const SftPresentation& shift, double tol) {
  if (shift.empty()) return EntropyValue::negative_infinity();
  NonnegativeMatrix m(shift.vertices().size());
  for (const auto& e : shift.edges()) m.add(e.from, e.to);
  return entropy_from_radius(spectral_radius(m, tol), true);
}

EntropyValue entropy(const SoficPresentation& shift, double tol) {
  const Dfa dfa = determinize(shift);
  if (dfa.num_states == 0) return EntropyValue::negative_infinity();
  NonnegativeMatrix m(dfa.num_states);
  for (std::size_t v = 0; v < dfa.num_states; ++v) {
    for (Symbol s = 0; s < dfa.alphabet_size; ++s) {
      const long t = dfa.step(v, s);
      if (t >= 0) m.add(v, static_cast<std::size_t>(t));
    }
  }
  return entropy_from_radius(spectral_radius(m, tol), true);
}

}  // namespace icc
