#include <algorithm>
#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "icc/wang.hpp"
#include "oracles.hpp"

using namespace icc;

namespace {

using Grid = std::vector<std::vector<std::size_t>>;

std::set<Pattern> brute_patterns(const TileSet& t, int w, int h, int e) {
  std::set<Pattern> out;
  for (const Grid& g : oracle::tilings(t, w + 2 * e, h + 2 * e)) {
    Pattern p;
    for (int y = e; y < e + h; ++y) {
      Word row;
      for (int x = e; x < e + w; ++x) row.push_back(t.symbol(g[y][x]));
      p.push_back(row);
    }
    out.insert(p);
  }
  return out;
}

// Column words of length len from tilings padded by `pad` columns on both sides;
// rows [0, n) give the lower label and [n, n+m) the upper one when m > 0.
std::set<Word> brute_strip_words(const TileSet& t, int n, int m, int len, int pad) {
  const Alphabet lower = Alphabet::power(t.symbols(), n);
  const Alphabet upper = Alphabet::power(t.symbols(), std::max(m, 1));
  const Alphabet pair = Alphabet::product(lower, upper);
  std::set<Word> out;
  for (const Grid& g : oracle::tilings(t, len + 2 * pad, n + m)) {
    Word w;
    for (int x = pad; x < pad + len; ++x) {
      std::vector<Symbol> lo, up;
      for (int y = 0; y < n; ++y) lo.push_back(t.symbol(g[y][x]));
      for (int y = n; y < n + m; ++y) up.push_back(t.symbol(g[y][x]));
      w.push_back(m == 0 ? lower.combine(lo) : pair.combine(std::vector<Symbol>{lower.combine(lo), upper.combine(up)}));
    }
    out.insert(w);
  }
  return out;
}

std::set<Word> as_set(const std::vector<Word>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Wang, TileSetAlphabets) {
  const TileSet t = paper_tileset();
  EXPECT_EQ(t.size(), 5u);
  EXPECT_EQ(t.colors().tokens(), (std::vector<std::string>{"blue", "red", "yellow"}));
  EXPECT_EQ(t.symbols().tokens(), (std::vector<std::string>{"0", "1"}));
  std::size_t ones = 0;
  for (std::size_t k = 0; k < t.size(); ++k) ones += t.symbols().token(t.symbol(k)) == "1";
  EXPECT_EQ(ones, 1u);
  EXPECT_THROW(TileSet(std::vector<WangTile>{}), InputError);
}

TEST(Wang, PatternsMatchBruteForceTilings) {
  const TileSet t = paper_tileset();
  for (auto [w, h, e] : std::vector<std::array<int, 3>>{{1, 1, 0}, {2, 2, 0}, {3, 2, 0}, {2, 2, 1}, {3, 3, 1}, {2, 2, 2}}) {
    const auto mine = enumerate_patterns(t, w, h, e);
    EXPECT_TRUE(std::is_sorted(mine.begin(), mine.end()));
    EXPECT_EQ(std::set<Pattern>(mine.begin(), mine.end()), brute_patterns(t, w, h, e)) << w << "x" << h << " e=" << e;
  }
}

TEST(Wang, ExtendablePatternsHoldAtMostOneOne) {
  const TileSet t = paper_tileset();
  const Symbol one = t.symbols().index("1");
  for (int w = 1; w <= 4; ++w) {
    for (int h = 1; h <= 4; ++h) {
      for (const Pattern& p : enumerate_patterns(t, w, h, 2)) {
        std::size_t c = 0;
        for (const Word& row : p) c += static_cast<std::size_t>(std::count(row.begin(), row.end(), one));
        EXPECT_LE(c, 1u);
      }
    }
  }
}

TEST(Wang, ExtendablePatternsAreLocallyAdmissible) {
  const TileSet t = paper_tileset();
  const auto local = enumerate_patterns(t, 4, 4, 0);
  const auto extendable = enumerate_patterns(t, 4, 4, 2);
  EXPECT_GE(local.size(), extendable.size());
  for (const Pattern& p : extendable) EXPECT_TRUE(std::binary_search(local.begin(), local.end(), p));
}

TEST(Wang, StripLanguageMatchesPaddedTilings) {
  const TileSet t = paper_tileset();
  for (int n = 1; n <= 2; ++n) {
    const StripPresentation s = strip_language(t, n);
    EXPECT_EQ(s.n, n);
    for (int len = 1; len <= 4; ++len) {
      EXPECT_EQ(as_set(factors(s.graph, static_cast<std::size_t>(len))), brute_strip_words(t, n, 0, len, 6))
          << "n=" << n << " len=" << len;
    }
  }
}

TEST(Wang, ConcatRelationMatchesPaddedTilings) {
  const TileSet t = paper_tileset();
  for (int n = 1; n <= 2; ++n) {
    for (int m = 1; m <= 2; ++m) {
      const SoficPresentation r = concat_relation(t, n, m);
      for (int len = 1; len <= 3; ++len) {
        EXPECT_EQ(as_set(factors(r, static_cast<std::size_t>(len))), brute_strip_words(t, n, m, len, 5))
            << n << "," << m << " len=" << len;
      }
    }
  }
}

TEST(Wang, BorderProtocolValidates) {
  const TileSet t = paper_tileset();
  double first = -1.0;
  for (int n = 1; n <= 2; ++n) {
    for (int m = 1; m <= 2; ++m) {
      const ValidationReport v = protocol_validate(concat_relation(t, n, m), border_protocol(t, n, m));
      EXPECT_TRUE(v.valid) << n << "," << m;
      EXPECT_LE(v.entropy_z.bits(), std::log2(3.0) + 1e-9);
      if (first < 0) first = v.entropy_z.bits();
      EXPECT_NEAR(v.entropy_z.bits(), first, 1e-12);
    }
  }
}

TEST(Wang, TilesWithoutHorizontalNeighbours) {
  const TileSet t({{"a", "a", "b", "c", "x"}, {"a", "a", "b", "c", "y"}});
  EXPECT_EQ(t.colors().tokens(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(enumerate_patterns(t, 1, 2, 0).size(), 4u);
  EXPECT_EQ(enumerate_patterns(t, 2, 1, 0).size(), 0u);
  EXPECT_THROW(strip_language(t, 0), InputError);
}
