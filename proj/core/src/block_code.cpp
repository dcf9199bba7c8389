#include "icc/block_code.hpp"

namespace icc {

BlockCode BlockCode::from_function(Alphabet source, Alphabet target, int radius, const Rule& rule,
                                   std::size_t guard) {
  if (radius < 0) throw InputError("block code radius must be >= 0");
  BlockCode code;
  code.source_ = std::move(source);
  code.target_ = std::move(target);
  code.radius_ = radius;
  const std::size_t len = code.span();
  const std::size_t q = code.source_.size();
  double total = 1.0;
  for (std::size_t i = 0; i < len; ++i) total *= static_cast<double>(q);
  if (total > static_cast<double>(guard)) throw GuardError("block code table exceeds the size guard");
  Word w(len, 0);
  while (true) {
    if (auto s = rule(w)) {
      if (*s >= code.target_.size()) throw InputError("block code output outside the target alphabet");
      code.table_.emplace(w, *s);
    }
    std::size_t i = len;
    while (i > 0 && ++w[i - 1] == q) w[--i] = 0;
    if (i == 0) break;
  }
  return code;
}

BlockCode BlockCode::from_table(Alphabet source, Alphabet target, int radius,
                                std::unordered_map<Word, Symbol, WordHash> table) {
  if (radius < 0) throw InputError("block code radius must be >= 0");
  BlockCode code;
  code.source_ = std::move(source);
  code.target_ = std::move(target);
  code.radius_ = radius;
  for (const auto& [w, s] : table) {
    if (w.size() != code.span()) throw InputError("block code window has the wrong length");
    for (Symbol a : w) {
      if (a >= code.source_.size()) throw InputError("block code window outside the source alphabet");
    }
    if (s >= code.target_.size()) throw InputError("block code output outside the target alphabet");
  }
  code.table_ = std::move(table);
  return code;
}

BlockCode BlockCode::identity(const Alphabet& alphabet) {
  return from_function(alphabet, alphabet, 0, [](WordView w) -> std::optional<Symbol> { return w[0]; });
}

std::optional<Symbol> BlockCode::apply(WordView window) const {
  auto it = table_.find(Word(window.begin(), window.end()));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

Word BlockCode::apply_word(WordView w) const {
  Word out;
  const std::size_t len = span();
  for (std::size_t i = 0; i + len <= w.size(); ++i) {
    auto s = apply(w.subspan(i, len));
    if (!s) throw InputError("block code undefined on window " + source_.render(w.subspan(i, len)));
    out.push_back(*s);
  }
  return out;
}

SoficPresentation apply_block_code(const BlockCode& code, const SftPresentation& shift) {
  if (!(code.source() == shift.alphabet())) throw InputError("block code source differs from the shift alphabet");
  if (shift.empty()) return SoficPresentation(code.target(), 0, {});
  const int window = std::max(shift.window(), static_cast<int>(code.span()));
  const SftPresentation recoded = shift.recode(window);
  std::vector<SoficPresentation::Edge> edges;
  edges.reserve(recoded.edges().size());
  for (const auto& e : recoded.edges()) {
    const Word w = recoded.edge_word(e);
    const WordView tail = WordView(w).last(code.span());
    auto s = code.apply(tail);
    if (!s) throw InputError("block code undefined on admissible window " + shift.alphabet().render(tail));
    edges.push_back({e.from, *s, e.to});
  }
  return SoficPresentation(code.target(), recoded.vertices().size(), std::move(edges));
}

SoficPresentation apply_block_code(const BlockCode& code, const SoficPresentation& shift, std::size_t guard) {
  if (!(code.source() == shift.alphabet())) throw InputError("block code source differs from the shift alphabet");
  if (shift.empty()) return SoficPresentation(code.target(), 0, {});
  // lift to the edge shift of the graph, where windows are edge paths
  const auto& g = shift.edges();
  if (g.size() > guard) throw GuardError("edge shift exceeds the size guard");
  std::vector<std::string> names;
  names.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) names.push_back(std::to_string(i));
  const Alphabet edge_alphabet(std::move(names));
  const auto connected = [&g](WordView p) {
    const std::size_t n = p.size();
    return n < 2 || g[p[n - 2]].to == g[p[n - 1]].from;
  };
  const SftPresentation edge_shift = SftPresentation::from_extension_check(edge_alphabet, 2, connected, guard);
  const BlockCode lifted = BlockCode::from_function(
      edge_alphabet, code.target(), code.radius(),
      [&](WordView path) -> std::optional<Symbol> {
        for (std::size_t i = 1; i < path.size(); ++i) {
          if (g[path[i - 1]].to != g[path[i]].from) return std::nullopt;
        }
        Word labels;
        for (Symbol e : path) labels.push_back(g[e].label);
        auto s = code.apply(labels);
        if (!s) throw InputError("block code undefined on admissible window " + shift.alphabet().render(labels));
        return s;
      },
      guard);
  return apply_block_code(lifted, edge_shift);
}

}  // namespace icc
