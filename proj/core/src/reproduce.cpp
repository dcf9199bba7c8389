#include "icc/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "icc/beta.hpp"
#include "icc/language.hpp"
#include "icc/protocol.hpp"
#include "icc/wang.hpp"

namespace icc {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

class Table {
 public:
  explicit Table(double tol) : tol_(tol) {}

  void near(std::string name, double expected, double observed) {
    rows_.push_back({std::move(name), fmt(expected), fmt(observed), std::abs(expected - observed) <= tol_});
  }
  void equal(std::string name, const std::string& expected, const std::string& observed) {
    rows_.push_back({std::move(name), expected, observed, expected == observed});
  }
  void truth(std::string name, bool observed) {
    rows_.push_back({std::move(name), "true", observed ? "true" : "false", observed});
  }
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      rows_.push_back({name, "no error", e.what(), false});
    }
  }
  std::vector<ReproCheck> take() { return std::move(rows_); }

 private:
  double tol_;
  std::vector<ReproCheck> rows_;
};

// {3,4}^Z union {5,6}^Z
SftPresentation two_component_shift() {
  const Alphabet a(std::vector<std::string>{"3", "4", "5", "6"});
  std::vector<Word> forbidden;
  for (Symbol x = 0; x < 4; ++x) {
    for (Symbol y = 0; y < 4; ++y) {
      if ((x < 2) != (y < 2)) forbidden.push_back({x, y});
    }
  }
  return build_sft(a, forbidden);
}

}  // namespace

std::vector<ReproCheck> reproduce_paper(double tol) {
  Table t(tol);
  t.guarded("full-shift entropy", [&] {
    for (int k : {2, 3, 4, 8}) {
      t.near("entropy full " + std::to_string(k) + "-shift = log2 " + std::to_string(k),
             std::log2(static_cast<double>(k)), entropy(full_shift(Alphabet::digits(k))).bits());
    }
  });
  t.guarded("EQ cover", [&] {
    for (int k : {1, 2, 3}) {
      const CoverResult c = cover_number_exact(RelationMatrix::eq(k));
      t.equal("N(EQ) on " + std::to_string(k) + "-bit strings is tight", std::to_string(1 << k) + " exact",
              std::to_string(c.cover_number) + (c.exact ? " exact" : " bound"));
    }
  });
  t.guarded("trivial cover", [&] {
    const CoverResult c = cover_number_exact(RelationMatrix::all_ones(8, 8));
    t.near("N(X x Y) = 0 bits", 0.0, c.bits);
  });
  t.guarded("NEQ index", [&] {
    for (int k = 1; k <= 4; ++k) {
      t.near("NEQ index protocol k=" + std::to_string(k) + " uses log2 k + 1 bits",
             std::log2(static_cast<double>(k)) + 1.0, neq_index_protocol(k).bits);
    }
  });
  t.guarded("fooling EQ", [&] {
    const RelationMatrix eq = RelationMatrix::eq(2);
    const FoolingCheck f = fooling_check(eq, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    t.near("diagonal of EQ_2 fools it: 2 bits", 2.0, f.accepted ? f.bits : -1.0);
  });
  t.guarded("EQ_T protocol", [&] {
    for (const auto& [name, shift] : {std::pair{"full 2-shift", full_shift(Alphabet::digits(2))},
                                      std::pair{"golden mean", golden_mean_shift()}}) {
      const ValidationReport v = protocol_validate(diagonal_shift(shift), eq_protocol(shift));
      t.truth(std::string("Alice sends her input: EQ_T validates, T = ") + name, v.valid);
      t.near(std::string("N(EQ_T) = H(T), T = ") + name, entropy(shift).bits(), v.entropy_z.bits());
    }
    const SftPresentation two = two_component_shift();
    t.near("EQ_T protocol for T = {3,4}^Z u {5,6}^Z has entropy log 2", 1.0,
           protocol_validate(diagonal_shift(two), eq_protocol(two)).entropy_z.bits());
  });
  t.guarded("trivial protocol", [&] {
    const SftPresentation f2 = full_shift(Alphabet::digits(2));
    const ValidationReport v = protocol_validate(product_shift(f2, f2), trivial_protocol(f2, f2));
    t.truth("constant message validates X x Y", v.valid);
    t.near("constant message costs 0 bits", 0.0, v.entropy_z.bits());
  });
  t.guarded("lift", [&] {
    const RelationMatrix eq1 = RelationMatrix::eq(1);
    const CoverResult c = cover_number_exact(tensor_power(eq1, 2));
    const ProtocolTriple p = lift_protocol(eq1, c.rectangles, 2);
    t.near("Z' has entropy log|Z| / n at |Z| = 4, n = 2", 1.0, entropy(p.z).bits());
    const ExtractedProtocol x = extract_protocol(p, eq1, 2);
    t.equal("extraction at c_n = 8, r = 2 uses log c_n + 4 log r = 7 bits", "8 2 7",
            x.c_n.str() + " " + std::to_string(x.r) + " " + fmt(x.bits));
  });
  t.guarded("conditional entropy", [&] {
    const SftPresentation leq = leq_shift();
    t.near("H_LEQ(Y | ...000...) = log 2", 1.0, conditional_entropy(leq, {{0}}).bits());
    t.near("H_LEQ(Y | ...111...) = 0", 0.0, conditional_entropy(leq, {{1}}).bits());
    t.near("H_LEQ(Y | ...0101...) = log 2 / 2", 0.5, conditional_entropy(leq, {{0, 1}}).bits());
    t.near("H_LEQ(Y | X) = log 2 (periods <= 1)", 1.0, conditional_entropy_sup(leq, 1).estimate);
    t.near("H_EQ(Y | X) = 0 (periods <= 4)", 0.0,
           conditional_entropy_sup(diagonal_shift(golden_mean_shift()), 4).estimate);
  });
  t.guarded("common factor", [&] {
    const SftPresentation g = golden_mean_shift();
    const BlockCode id = BlockCode::identity(g.alphabet());
    const CommonFactorReport r = common_factor_bound(diagonal_shift(g), id, id, sofic_from_sft(g));
    t.near("T is a common factor of EQ_T: bound H(T)", entropy(g).bits(), r.accepted ? r.bound.bits() : -1.0);
  });
  t.guarded("beta", [&] {
    t.near("integer beta = 2 gives the full 2-shift", 1.0, entropy(beta_shift({2})).bits());
    t.near("beta-shift entropy is log beta (golden ratio)", std::log2(beta_root({1, 1})),
           entropy(beta_shift({1, 1})).bits());
  });
  t.guarded("tileset", [&] {
    const TileSet ts = paper_tileset();
    std::size_t ones = 0, blue = 0, yellow = 0;
    for (const auto& tile : ts.tiles()) {
      ones += tile.symbol == "1";
      const bool mono = tile.north == tile.south && tile.south == tile.east && tile.east == tile.west;
      blue += mono && tile.north == "blue" && tile.symbol == "0";
      yellow += mono && tile.north == "yellow" && tile.symbol == "0";
    }
    t.equal("tile set: tiles, colors, symbol-1 tiles, all-blue, all-yellow", "5 3 1 1 1",
            std::to_string(ts.size()) + " " + std::to_string(ts.colors().size()) + " " + std::to_string(ones) + " " +
                std::to_string(blue) + " " + std::to_string(yellow));
    std::size_t worst = 0;
    const Symbol one = ts.symbols().index("1");
    for (int w = 1; w <= 4; ++w) {
      for (int h = 1; h <= 4; ++h) {
        for (const Pattern& p : enumerate_patterns(ts, w, h, 2)) {
          std::size_t c = 0;
          for (const Word& row : p) c += static_cast<std::size_t>(std::count(row.begin(), row.end(), one));
          worst = std::max(worst, c);
        }
      }
    }
    t.equal("patterns up to 4x4 have at most one symbol 1", "<= 1", worst <= 1 ? "<= 1" : std::to_string(worst));
    for (int n = 1; n <= 2; ++n) {
      for (int m = 1; m <= 2; ++m) {
        const ValidationReport v = protocol_validate(concat_relation(ts, n, m), border_protocol(ts, n, m));
        t.truth("border colors protocol validates R_{" + std::to_string(n) + "," + std::to_string(m) + "}", v.valid);
        t.near("border protocol entropy at (" + std::to_string(n) + "," + std::to_string(m) + ") is log2 3",
               std::log2(3.0), v.entropy_z.bits());
      }
    }
  });
  t.guarded("counterexample", [&] {
    const LanguageOracle o = counterexample_oracle();
    const auto word = [&](const std::string& s) {
      Word w;
      for (char ch : s) w.push_back(o.alphabet.index(std::string(1, ch)));
      return w;
    };
    t.equal("cadbc forbidden, caadbc allowed", "false true",
            std::string(o.contains(word("cadbc")) ? "true" : "false") + " " +
                (o.contains(word("caadbc")) ? "true" : "false"));
    const auto counts = residual_profile_count(o, 8, 10);
    bool increasing = true;
    for (std::size_t l = 3; l < counts.size(); ++l) increasing = increasing && counts[l] > counts[l - 1];
    t.truth("residual profiles of the counterexample grow on lengths 2..8", increasing);
  });
  return t.take();
}

}  // namespace icc
