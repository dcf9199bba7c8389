#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace oracle {

int ForbiddenShift::longest() const {
  int l = 1;
  for (const auto& f : forbidden) l = std::max(l, static_cast<int>(f.size()));
  return l;
}

namespace {

bool ends_with(const Word& w, const Word& f) {
  return f.size() <= w.size() && std::equal(f.rbegin(), f.rend(), w.rbegin());
}

bool starts_with(const Word& w, const Word& f) {
  return f.size() <= w.size() && std::equal(f.begin(), f.end(), w.begin());
}

// Extension search memoized on (context, steps); the context is the last (or
// first) L-1 letters, all that a forbidden word can still see.
class Extender {
 public:
  Extender(const ForbiddenShift& s, bool rightward) : s_(s), right_(rightward) {}

  bool extendable(Word context, std::size_t steps) {
    trim(context);
    if (steps == 0) return true;
    const auto key = std::make_pair(context, steps);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = false;
    for (Symbol a = 0; a < static_cast<Symbol>(s_.k) && !ok; ++a) {
      Word next = context;
      if (right_) {
        next.push_back(a);
      } else {
        next.insert(next.begin(), a);
      }
      bool clean = true;
      for (const auto& f : s_.forbidden) {
        if (right_ ? ends_with(next, f) : starts_with(next, f)) clean = false;
      }
      ok = clean && extendable(next, steps - 1);
    }
    memo_[key] = ok;
    return ok;
  }

 private:
  void trim(Word& c) const {
    const std::size_t keep = static_cast<std::size_t>(s_.longest() - 1);
    if (c.size() <= keep) return;
    if (right_) {
      c.erase(c.begin(), c.end() - static_cast<long>(keep));
    } else {
      c.resize(keep);
    }
  }

  const ForbiddenShift& s_;
  bool right_;
  std::map<std::pair<Word, std::size_t>, bool> memo_;
};

std::size_t vertex_bound(const ForbiddenShift& s) {
  std::size_t v = 1;
  for (int i = 0; i + 1 < s.longest(); ++i) v *= static_cast<std::size_t>(s.k);
  return v;
}

void all_words(int k, std::size_t n, const std::function<void(const Word&)>& visit) {
  Word w(n, 0);
  while (true) {
    visit(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] + 1 == static_cast<Symbol>(k)) w[--i] = 0;
    if (i == 0) return;
    ++w[i - 1];
  }
}

}  // namespace

bool ForbiddenShift::locally_admissible(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const auto& f : forbidden) {
      if (i + f.size() <= w.size() && std::equal(f.begin(), f.end(), w.begin() + static_cast<long>(i))) return false;
    }
  }
  return true;
}

std::set<Word> factor_words(const ForbiddenShift& s, std::size_t n) {
  const std::size_t steps = vertex_bound(s) + static_cast<std::size_t>(s.longest()) + 1;
  const std::size_t pad_len = static_cast<std::size_t>(s.longest() - 1);
  Extender right(s, true), left(s, false);
  std::set<Word> out;
  all_words(s.k, n, [&](const Word& w) {
    if (!s.locally_admissible(w)) return;
    // pad short words on the right so both sides see a full context
    const std::size_t pad = w.size() < pad_len ? pad_len - w.size() : 0;
    bool found = false;
    all_words(s.k, pad, [&](const Word& v) {
      if (found) return;
      Word wv = w;
      wv.insert(wv.end(), v.begin(), v.end());
      if (s.locally_admissible(wv) && right.extendable(wv, steps) && left.extendable(wv, steps)) found = true;
    });
    if (found) out.insert(w);
  });
  return out;
}

std::uint64_t periodic_points(const ForbiddenShift& s, std::size_t p) {
  std::uint64_t count = 0;
  all_words(s.k, p, [&](const Word& w) {
    for (std::size_t i = 0; i < p; ++i) {
      for (const auto& f : s.forbidden) {
        bool match = true;
        for (std::size_t j = 0; j < f.size() && match; ++j) match = w[(i + j) % p] == f[j];
        if (match) return;
      }
    }
    ++count;
  });
  return count;
}

EntropyBracket entropy_bracket(const ForbiddenShift& s, std::size_t n, std::size_t p) {
  const double v = static_cast<double>(vertex_bound(s));
  const auto pp = static_cast<double>(periodic_points(s, p));
  const auto cn = static_cast<double>(factor_words(s, n).size());
  const double ninf = -std::numeric_limits<double>::infinity();
  return {pp > 0 ? std::log2(pp / v) / static_cast<double>(p) : ninf,
          cn > 0 ? std::log2(cn) / static_cast<double>(n) : ninf};
}

ForbiddenShift random_shift(std::mt19937_64& rng, int max_k, int max_len, int max_words) {
  ForbiddenShift s;
  s.k = std::uniform_int_distribution<int>(2, max_k)(rng);
  const int words = std::uniform_int_distribution<int>(0, max_words)(rng);
  std::uniform_int_distribution<int> len(2, max_len), sym(0, s.k - 1);
  for (int i = 0; i < words; ++i) {
    Word f(static_cast<std::size_t>(len(rng)));
    for (auto& x : f) x = static_cast<Symbol>(sym(rng));
    s.forbidden.push_back(f);
  }
  return s;
}

std::set<icc::Rectangle> maximal_rectangles(const icc::RelationMatrix& r) {
  const std::size_t nx = r.x_size(), ny = r.y_size();
  if (nx > 20) throw std::invalid_argument("too many rows for the oracle");
  std::set<icc::Rectangle> out;
  for (std::uint32_t mask = 1; mask < (1u << nx); ++mask) {
    icc::Rectangle rect;
    for (std::size_t y = 0; y < ny; ++y) {
      bool all = true;
      for (std::size_t x = 0; x < nx && all; ++x) all = !((mask >> x) & 1u) || r.at(x, y);
      if (all) rect.cols.push_back(y);
    }
    if (rect.cols.empty()) continue;
    std::uint32_t closure = 0;
    for (std::size_t x = 0; x < nx; ++x) {
      bool all = true;
      for (std::size_t y : rect.cols) all = all && r.at(x, y);
      if (all) closure |= 1u << x;
    }
    if (closure != mask) continue;
    for (std::size_t x = 0; x < nx; ++x) {
      if ((mask >> x) & 1u) rect.rows.push_back(x);
    }
    out.insert(rect);
  }
  return out;
}

std::size_t min_cover(const icc::RelationMatrix& r, std::size_t limit) {
  const auto ones = r.ones();
  if (ones.size() > 64) throw std::invalid_argument("too many ones for the oracle");
  std::vector<std::uint64_t> masks;
  for (const auto& rect : oracle::maximal_rectangles(r)) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < ones.size(); ++i) {
      if (rect.contains(ones[i].first, ones[i].second)) m |= std::uint64_t{1} << i;
    }
    masks.push_back(m);
  }
  const std::uint64_t full = ones.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ones.size()) - 1;
  std::function<bool(std::uint64_t, std::size_t)> search = [&](std::uint64_t covered, std::size_t left) {
    if (covered == full) return true;
    if (left == 0) return false;
    const int first = __builtin_ctzll(~covered & full);
    for (auto m : masks) {
      if (((m >> first) & 1u) && search(covered | m, left - 1)) return true;
    }
    return false;
  };
  for (std::size_t d = 0; d <= limit; ++d) {
    if (search(0, d)) return d;
  }
  throw std::runtime_error("cover larger than the oracle limit");
}

Rational fractional_cover(const icc::RelationMatrix& r) {
  const auto ones = r.ones();
  const auto rect_set = oracle::maximal_rectangles(r);
  const std::vector<icc::Rectangle> rects(rect_set.begin(), rect_set.end());
  const std::size_t n = ones.size(), m = rects.size(), cols = n + m + 1;
  // max sum y_e subject to sum_{e in k} y_e <= 1 for every rectangle k
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(cols, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t e = 0; e < n; ++e) {
      if (rects[k].contains(ones[e].first, ones[e].second)) t[k][e] = 1;
    }
    t[k][n + k] = 1;
    t[k][cols - 1] = 1;
    basis[k] = n + k;
  }
  for (std::size_t e = 0; e < n; ++e) t[m][e] = 1;  // reduced costs
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (t[m][j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t k = 0; k < m; ++k) {
      if (t[k][enter] <= 0) continue;
      const Rational ratio = t[k][cols - 1] / t[k][enter];
      if (leave == m || ratio < best || (ratio == best && basis[k] < basis[leave])) {
        best = ratio;
        leave = k;
      }
    }
    if (leave == m) throw std::runtime_error("unbounded packing LP");
    const Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t k = 0; k <= m; ++k) {
      if (k == leave || t[k][enter] == 0) continue;
      const Rational f = t[k][enter];
      for (std::size_t j = 0; j < cols; ++j) t[k][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return -t[m][cols - 1];
}

double newton_beta(const std::vector<int>& digits) {
  const std::size_t p = digits.size();
  double x = digits.front() + 1.0;
  for (int it = 0; it < 200; ++it) {
    double f = std::pow(x, static_cast<double>(p)), df = p * std::pow(x, static_cast<double>(p - 1));
    for (std::size_t i = 0; i < p; ++i) {
      const double e = static_cast<double>(p - 1 - i);
      f -= digits[i] * std::pow(x, e);
      if (e > 0) df -= digits[i] * e * std::pow(x, e - 1);
    }
    x -= f / df;
  }
  return x;
}

std::vector<int> greedy_expansion(double beta, std::size_t max_digits) {
  std::vector<int> out;
  double r = 1.0;
  for (std::size_t i = 0; i < max_digits; ++i) {
    const double v = beta * r;
    const double t = std::floor(v + 1e-9);
    out.push_back(static_cast<int>(t));
    r = v - t;
    if (std::abs(r) < 1e-9) break;
  }
  return out;
}

bool dominated_by(const Word& w, const Word& cycle) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; i + j < w.size(); ++j) {
      const Symbol c = cycle[j % cycle.size()];
      if (w[i + j] < c) break;
      if (w[i + j] > c) return false;
    }
  }
  return true;
}

double leq_conditional(const Word& x_period) {
  const auto zeros = std::count(x_period.begin(), x_period.end(), Symbol{0});
  return static_cast<double>(zeros) / static_cast<double>(x_period.size());
}

bool has_counterexample_factor(const Word& w) {
  constexpr Symbol a = 0, b = 1, c = 2, d = 3;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != c) continue;
    std::size_t j = i + 1, as = 0, bs = 0;
    while (j < w.size() && w[j] == a) ++j, ++as;
    if (j >= w.size() || w[j] != d) continue;
    ++j;
    while (j < w.size() && w[j] == b) ++j, ++bs;
    if (j < w.size() && w[j] == c && as == bs) return true;
  }
  return false;
}

std::vector<std::vector<std::vector<std::size_t>>> tilings(const icc::TileSet& t, int cols, int rows) {
  const auto& tiles = t.tiles();
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::vector<std::size_t>> grid(static_cast<std::size_t>(rows), std::vector<std::size_t>(cols));
  std::function<void(int)> place = [&](int cell) {
    if (cell == rows * cols) {
      out.push_back(grid);
      return;
    }
    const int y = cell / cols, x = cell % cols;
    for (std::size_t k = 0; k < tiles.size(); ++k) {
      if (x > 0 && tiles[grid[y][x - 1]].east != tiles[k].west) continue;
      if (y > 0 && tiles[grid[y - 1][x]].north != tiles[k].south) continue;
      grid[y][x] = k;
      place(cell + 1);
    }
  };
  place(0);
  return out;
}

}  // namespace oracle
