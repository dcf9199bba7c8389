#include "icc/wang.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace icc {

namespace {

Alphabet sorted_alphabet(std::set<std::string> tokens) {
  return Alphabet(std::vector<std::string>(tokens.begin(), tokens.end()));
}

using Column = std::vector<std::size_t>;

// Vertically consistent stacks of n tiles, bottom first, in lexicographic order.
std::vector<Column> consistent_columns(const TileSet& tiles, int n, std::size_t guard) {
  if (n < 1) throw InputError("strip height must be >= 1");
  std::vector<Column> out;
  Column stack;
  const auto extend = [&](auto& self) -> void {
    if (stack.size() == static_cast<std::size_t>(n)) {
      if (out.size() >= guard) throw GuardError("column enumeration exceeded the guard");
      out.push_back(stack);
      return;
    }
    for (std::size_t t = 0; t < tiles.size(); ++t) {
      if (!stack.empty() && tiles.north(stack.back()) != tiles.south(t)) continue;
      stack.push_back(t);
      self(self);
      stack.pop_back();
    }
  };
  extend(extend);
  return out;
}

// Graph whose states are vertical color vectors and whose edges are columns.
SoficPresentation column_graph(const TileSet& tiles, const std::vector<Column>& cols, const Alphabet& labels,
                               const std::function<Symbol(const Column&)>& label) {
  std::map<Word, std::size_t> state;
  const auto id = [&state](Word key) { return state.emplace(std::move(key), state.size()).first->second; };
  std::vector<SoficPresentation::Edge> edges;
  for (const auto& col : cols) {
    Word west, east;
    for (std::size_t t : col) {
      west.push_back(tiles.west(t));
      east.push_back(tiles.east(t));
    }
    const std::size_t from = id(std::move(west));
    const std::size_t to = id(std::move(east));
    edges.push_back({from, label(col), to});
  }
  return SoficPresentation(labels, state.size(), std::move(edges));
}

Word column_symbols(const TileSet& tiles, const Column& col, std::size_t from, std::size_t count) {
  Word out;
  for (std::size_t i = from; i < from + count; ++i) out.push_back(tiles.symbol(col[i]));
  return out;
}

}  // namespace

TileSet::TileSet(std::vector<WangTile> tiles) : tiles_(std::move(tiles)) {
  if (tiles_.empty()) throw InputError("a tile set needs at least one tile");
  std::set<std::string> colors, symbols;
  for (const auto& t : tiles_) {
    colors.insert({t.north, t.south, t.east, t.west});
    symbols.insert(t.symbol);
  }
  colors_ = sorted_alphabet(std::move(colors));
  symbols_ = sorted_alphabet(std::move(symbols));
  for (const auto& t : tiles_) {
    idx_.push_back({colors_.index(t.north), colors_.index(t.south), colors_.index(t.east), colors_.index(t.west),
                    symbols_.index(t.symbol)});
  }
}

TileSet paper_tileset() {
  return TileSet({
      {"blue", "blue", "blue", "blue", "0"},
      {"red", "blue", "red", "blue", "1"},
      {"red", "red", "yellow", "blue", "0"},
      {"yellow", "blue", "red", "red", "0"},
      {"yellow", "yellow", "yellow", "yellow", "0"},
  });
}

std::vector<Pattern> enumerate_patterns(const TileSet& tiles, int w, int h, int extend_radius, std::size_t guard) {
  if (w < 1 || h < 1) throw InputError("pattern size must be positive");
  if (extend_radius < 0) throw InputError("extension radius must be >= 0");
  const std::size_t width = static_cast<std::size_t>(w + 2 * extend_radius);
  const std::size_t height = static_cast<std::size_t>(h + 2 * extend_radius);
  const std::size_t e = static_cast<std::size_t>(extend_radius);
  constexpr char kFree = '\xff';
  // state: [west color of the next cell] [north colors of the frontier] [central symbols so far]
  std::unordered_set<std::string> states{std::string(1 + width, kFree)};
  for (std::size_t row = 0; row < height; ++row) {
    for (std::size_t col = 0; col < width; ++col) {
      const bool central = row >= e && row < e + static_cast<std::size_t>(h) && col >= e &&
                           col < e + static_cast<std::size_t>(w);
      std::unordered_set<std::string> next;
      for (const auto& s : states) {
        for (std::size_t t = 0; t < tiles.size(); ++t) {
          if (col > 0 && static_cast<unsigned char>(s[0]) != tiles.west(t)) continue;
          if (s[1 + col] != kFree && static_cast<unsigned char>(s[1 + col]) != tiles.south(t)) continue;
          std::string n = s;
          n[0] = col + 1 == width ? kFree : static_cast<char>(tiles.east(t));
          n[1 + col] = static_cast<char>(tiles.north(t));
          if (central) n.push_back(static_cast<char>(tiles.symbol(t)));
          next.insert(std::move(n));
          if (next.size() > guard) throw GuardError("pattern enumeration exceeded the state guard");
        }
      }
      states.swap(next);
    }
  }
  std::set<Pattern> patterns;
  for (const auto& s : states) {
    Pattern p(static_cast<std::size_t>(h), Word(static_cast<std::size_t>(w)));
    for (std::size_t i = 0; i < p.size() * static_cast<std::size_t>(w); ++i) {
      p[i / static_cast<std::size_t>(w)][i % static_cast<std::size_t>(w)] =
          static_cast<unsigned char>(s[1 + width + i]);
    }
    patterns.insert(std::move(p));
  }
  return {patterns.begin(), patterns.end()};
}

StripPresentation strip_language(const TileSet& tiles, int n, std::size_t guard) {
  const auto cols = consistent_columns(tiles, n, guard);
  const Alphabet labels = Alphabet::power(tiles.symbols(), n);
  StripPresentation out;
  out.n = n;
  out.columns = cols.size();
  out.graph = column_graph(tiles, cols, labels, [&](const Column& c) {
    return labels.combine(column_symbols(tiles, c, 0, c.size()));
  });
  return out;
}

SoficPresentation concat_relation(const TileSet& tiles, int n, int m, std::size_t guard) {
  if (n < 1 || m < 1) throw InputError("strip heights must be >= 1");
  const auto cols = consistent_columns(tiles, n + m, guard);
  const Alphabet lower = Alphabet::power(tiles.symbols(), n), upper = Alphabet::power(tiles.symbols(), m);
  const Alphabet labels = Alphabet::product(lower, upper);
  const std::size_t nn = static_cast<std::size_t>(n), mm = static_cast<std::size_t>(m);
  return column_graph(tiles, cols, labels, [&](const Column& c) {
    return labels.combine(std::vector<Symbol>{lower.combine(column_symbols(tiles, c, 0, nn)),
                                              upper.combine(column_symbols(tiles, c, nn, mm))});
  });
}

SoficProtocol border_protocol(const TileSet& tiles, int n, int m, std::size_t guard) {
  const Alphabet& c = tiles.colors();
  const Alphabet lower = Alphabet::power(tiles.symbols(), n), upper = Alphabet::power(tiles.symbols(), m);
  const Alphabet ac = Alphabet::product(lower, c), bc = Alphabet::product(upper, c);
  std::vector<SoficPresentation::Edge> loops;
  for (Symbol s = 0; s < c.size(); ++s) loops.push_back({0, s, 0});
  SoficProtocol out;
  out.a = lower;
  out.b = upper;
  out.c = c;
  out.z = SoficPresentation(c, 1, std::move(loops));
  out.sx = column_graph(tiles, consistent_columns(tiles, n, guard), ac, [&](const Column& col) {
    return ac.combine(std::vector<Symbol>{lower.combine(column_symbols(tiles, col, 0, col.size())),
                                          tiles.north(col.back())});
  });
  out.sy = column_graph(tiles, consistent_columns(tiles, m, guard), bc, [&](const Column& col) {
    return bc.combine(std::vector<Symbol>{upper.combine(column_symbols(tiles, col, 0, col.size())),
                                          tiles.south(col.front())});
  });
  return out;
}

}  // namespace icc
