#pragma once

#include <array>
#include <string>
#include <vector>

#include "icc/protocol.hpp"
#include "icc/sofic.hpp"

namespace icc {

struct WangTile {
  std::string north, south, east, west;
  std::string symbol;
  bool operator==(const WangTile&) const = default;
};

/// Wang tiles with their derived color and symbol alphabets (sorted tokens).
/// Horizontal neighbours match when left.east == right.west, vertical ones
/// when lower.north == upper.south.
class TileSet {
 public:
  TileSet() = default;
  explicit TileSet(std::vector<WangTile> tiles);

  const std::vector<WangTile>& tiles() const { return tiles_; }
  std::size_t size() const { return tiles_.size(); }
  const Alphabet& colors() const { return colors_; }
  const Alphabet& symbols() const { return symbols_; }

  Symbol north(std::size_t t) const { return idx_[t][0]; }
  Symbol south(std::size_t t) const { return idx_[t][1]; }
  Symbol east(std::size_t t) const { return idx_[t][2]; }
  Symbol west(std::size_t t) const { return idx_[t][3]; }
  Symbol symbol(std::size_t t) const { return idx_[t][4]; }

 private:
  std::vector<WangTile> tiles_;
  Alphabet colors_;
  Alphabet symbols_;
  std::vector<std::array<Symbol, 5>> idx_;
};

/// The five tiles whose pictures carry at most one symbol 1: all blue, the
/// 1-tile, the vertical-line tile, the horizontal-line tile, all yellow.
TileSet paper_tileset();

/// Symbol pattern, rows listed bottom to top.
using Pattern = std::vector<Word>;

/// Distinct w x h central patterns of valid tilings of the (w+2e) x (h+2e)
/// rectangle, sorted. e = 0 gives the locally admissible patterns.
std::vector<Pattern> enumerate_patterns(const TileSet& tiles, int w, int h, int extend_radius,
                                        std::size_t guard = kDefaultStateGuard);

/// Locally admissible n-row strips as a sofic shift over Sigma^n; a symbol is
/// a column read bottom to top. States are color vectors on the vertical edges.
struct StripPresentation {
  int n = 0;
  SoficPresentation graph;
  /// Distinct vertically consistent n-columns.
  std::size_t columns = 0;
};

StripPresentation strip_language(const TileSet& tiles, int n, std::size_t guard = kDefaultStateGuard);

/// R_{n,m}: pairs (x, y) of an n-strip and an m-strip such that x below y is a
/// locally admissible (n+m)-strip, over Sigma^n x Sigma^m.
SoficPresentation concat_relation(const TileSet& tiles, int n, int m, std::size_t guard = kDefaultStateGuard);

/// Alice (the lower strip) sends the colors on the border row. Z is the full
/// shift over the colors; S_X pairs an n-strip with the north colors of its
/// top row and S_Y an m-strip with the south colors of its bottom row.
SoficProtocol border_protocol(const TileSet& tiles, int n, int m, std::size_t guard = kDefaultStateGuard);

}  // namespace icc
