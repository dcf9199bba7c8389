#include "icc/cover.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <boost/dynamic_bitset.hpp>

namespace icc {

namespace {

using Bits = boost::dynamic_bitset<>;

void require_nonempty(const RelationMatrix& r) {
  if (r.empty()) throw InputError("empty relation");
}

// Entries, rectangles and their incidences, shared by the cover searches.
struct Instance {
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  std::vector<Rectangle> rectangles;
  std::vector<Bits> rect_entries;
  std::vector<std::vector<std::size_t>> entry_rects;

  explicit Instance(const RelationMatrix& r) : entries(r.ones()), rectangles(maximal_rectangles(r)) {
    std::vector<std::size_t> index(r.x_size() * r.y_size(), 0);
    for (std::size_t e = 0; e < entries.size(); ++e) index[entries[e].first * r.y_size() + entries[e].second] = e;
    entry_rects.resize(entries.size());
    for (std::size_t k = 0; k < rectangles.size(); ++k) {
      Bits b(entries.size());
      for (std::size_t x : rectangles[k].rows) {
        for (std::size_t y : rectangles[k].cols) {
          const std::size_t e = index[x * r.y_size() + y];
          b.set(e);
          entry_rects[e].push_back(k);
        }
      }
      rect_entries.push_back(std::move(b));
    }
  }
};

CoverResult make_result(const Instance& inst, const std::vector<std::size_t>& chosen) {
  CoverResult out;
  std::vector<std::size_t> sorted(chosen);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k : sorted) out.rectangles.push_back(inst.rectangles[k]);
  out.cover_number = out.rectangles.size();
  out.bits = std::log2(static_cast<double>(out.cover_number));
  return out;
}

std::vector<std::size_t> greedy_choice(const Instance& inst) {
  Bits covered(inst.entries.size());
  std::vector<std::size_t> chosen;
  while (!covered.all()) {
    std::size_t best = 0, gain = 0;
    for (std::size_t k = 0; k < inst.rect_entries.size(); ++k) {
      const std::size_t g = (inst.rect_entries[k] - covered).count();
      if (g > gain) {
        gain = g;
        best = k;
      }
    }
    chosen.push_back(best);
    covered |= inst.rect_entries[best];
  }
  return chosen;
}

class BranchAndBound {
 public:
  BranchAndBound(const RelationMatrix& r, const Instance& inst, std::size_t budget)
      : inst_(inst), budget_(budget), compatible_(inst.entries.size(), Bits(inst.entries.size())) {
    const auto& en = inst.entries;
    // two 1-entries share a rectangle iff the crossed entries are also 1
    for (std::size_t a = 0; a < en.size(); ++a) {
      for (std::size_t b = 0; b < en.size(); ++b) {
        if (r.at(en[a].first, en[b].second) && r.at(en[b].first, en[a].second)) compatible_[a].set(b);
      }
    }
    order_.resize(en.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return inst.entry_rects[a].size() < inst.entry_rects[b].size();
    });
  }

  std::size_t independent_bound(const Bits& covered) const {
    std::vector<std::size_t> picked;
    for (std::size_t e : order_) {
      if (covered.test(e)) continue;
      bool independent = true;
      for (std::size_t p : picked) {
        if (compatible_[e].test(p)) {
          independent = false;
          break;
        }
      }
      if (independent) picked.push_back(e);
    }
    return picked.size();
  }

  // larger of the independent-set bound and uncovered / largest gain; the
  // second part is too slow to pay for itself inside the search
  std::size_t lower_bound(const Bits& covered) const {
    const std::size_t left = inst_.entries.size() - covered.count();
    std::size_t widest = 1;
    for (const auto& b : inst_.rect_entries) widest = std::max(widest, (b - covered).count());
    return std::max(independent_bound(covered), (left + widest - 1) / widest);
  }

  CoverResult run() {
    best_ = greedy_choice(inst_);
    Bits covered(inst_.entries.size());
    const std::size_t root = lower_bound(covered);
    std::vector<std::size_t> chosen;
    if (root < best_.size()) search(covered, chosen);
    CoverResult out = make_result(inst_, best_);
    out.exact = !exhausted_;
    out.lower_bound = out.exact ? out.cover_number : root;
    out.nodes = nodes_;
    return out;
  }

 private:
  void search(const Bits& covered, std::vector<std::size_t>& chosen) {
    if (nodes_ >= budget_) {
      exhausted_ = true;
      return;
    }
    ++nodes_;
    if (covered.all()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + independent_bound(covered) >= best_.size()) return;
    std::size_t pivot = 0;
    for (std::size_t e : order_) {
      if (!covered.test(e)) {
        pivot = e;
        break;
      }
    }
    const auto& cands = inst_.entry_rects[pivot];
    std::vector<Bits> gain;
    gain.reserve(cands.size());
    for (std::size_t k : cands) gain.push_back(inst_.rect_entries[k] - covered);
    // drop candidates whose new coverage is inside another's
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < cands.size() && !dominated; ++j) {
        if (i == j || !gain[i].is_subset_of(gain[j])) continue;
        dominated = gain[i] != gain[j] || j < i;
      }
      if (!dominated) live.push_back(i);
    }
    std::stable_sort(live.begin(), live.end(),
                     [&](std::size_t a, std::size_t b) { return gain[a].count() > gain[b].count(); });
    for (std::size_t i : live) {
      chosen.push_back(cands[i]);
      search(covered | inst_.rect_entries[cands[i]], chosen);
      chosen.pop_back();
      if (exhausted_) return;
    }
  }

  const Instance& inst_;
  std::size_t budget_;
  std::vector<Bits> compatible_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> best_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

std::vector<Rectangle> maximal_rectangles(const RelationMatrix& r, std::size_t guard) {
  require_nonempty(r);
  std::vector<Bits> support(r.x_size(), Bits(r.y_size()));
  for (auto [x, y] : r.ones()) support[x].set(y);
  // closed column sets are the nonempty intersections of row supports
  std::set<Bits> closed;
  std::vector<Bits> pending;
  for (const auto& s : support) {
    if (s.any() && closed.insert(s).second) pending.push_back(s);
  }
  while (!pending.empty()) {
    const Bits c = std::move(pending.back());
    pending.pop_back();
    for (const auto& s : support) {
      Bits meet = c & s;
      if (meet.any() && closed.insert(meet).second) {
        if (closed.size() > guard) throw GuardError("maximal rectangle enumeration exceeded the guard");
        pending.push_back(std::move(meet));
      }
    }
  }
  std::vector<Rectangle> out;
  for (const auto& c : closed) {
    Rectangle rect;
    for (std::size_t x = 0; x < r.x_size(); ++x) {
      if (c.is_subset_of(support[x])) rect.rows.push_back(x);
    }
    for (std::size_t y = c.find_first(); y != Bits::npos; y = c.find_next(y)) rect.cols.push_back(y);
    out.push_back(std::move(rect));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> cover_defect(const RelationMatrix& r, const std::vector<Rectangle>& rectangles) {
  std::vector<unsigned char> hit(r.x_size() * r.y_size(), 0);
  for (std::size_t k = 0; k < rectangles.size(); ++k) {
    const auto& rect = rectangles[k];
    if (rect.rows.empty() || rect.cols.empty()) return "rectangle " + std::to_string(k) + " is empty";
    for (std::size_t x : rect.rows) {
      for (std::size_t y : rect.cols) {
        if (x >= r.x_size() || y >= r.y_size()) return "rectangle " + std::to_string(k) + " is out of range";
        if (!r.at(x, y)) {
          return "rectangle " + std::to_string(k) + " contains 0-entry (" + std::to_string(x) + ", " +
                 std::to_string(y) + ")";
        }
        hit[x * r.y_size() + y] = 1;
      }
    }
  }
  for (auto [x, y] : r.ones()) {
    if (!hit[x * r.y_size() + y]) return "1-entry (" + std::to_string(x) + ", " + std::to_string(y) + ") is uncovered";
  }
  return std::nullopt;
}

CoverResult cover_number_exact(const RelationMatrix& r, std::size_t budget) {
  if (budget == 0) throw InputError("budget must be positive");
  require_nonempty(r);
  const Instance inst(r);
  return BranchAndBound(r, inst, budget).run();
}

CoverResult cover_number_greedy(const RelationMatrix& r) {
  require_nonempty(r);
  const Instance inst(r);
  CoverResult out = make_result(inst, greedy_choice(inst));
  out.lower_bound = 1;
  return out;
}

FractionalCover fractional_cover(const RelationMatrix& r, double eps, std::size_t max_iterations) {
  if (!(eps > 0)) throw InputError("eps must be positive");
  require_nonempty(r);
  const Instance inst(r);
  const std::size_t m = inst.rectangles.size(), ne = inst.entries.size();
  std::vector<std::vector<std::size_t>> members(m);
  for (std::size_t e = 0; e < ne; ++e) {
    for (std::size_t k : inst.entry_rects[e]) members[k].push_back(e);
  }
  const double step = eps / 3.0;
  std::vector<double> length(m, 1.0), cost(ne);
  std::vector<std::size_t> load(m, 0);
  std::size_t packed = 0, max_load = 0;
  auto recompute = [&] {
    for (std::size_t e = 0; e < ne; ++e) {
      cost[e] = 0;
      for (std::size_t k : inst.entry_rects[e]) cost[e] += length[k];
    }
  };
  recompute();

  FractionalCover out;
  out.rectangles = inst.rectangles;
  double best_upper = std::numeric_limits<double>::infinity(), best_lower = 0.0;
  std::vector<double> best_weights;
  std::size_t it = 0;
  for (; it < max_iterations; ++it) {
    if (it % 1024 == 0) recompute();
    const std::size_t e = static_cast<std::size_t>(std::min_element(cost.begin(), cost.end()) - cost.begin());
    const double total = std::accumulate(length.begin(), length.end(), 0.0);
    if (total / cost[e] < best_upper) {
      // primal weights length / min cost cover every entry at least once
      std::vector<double> w(m);
      for (std::size_t k = 0; k < m; ++k) w[k] = length[k] / cost[e];
      double worst = std::numeric_limits<double>::infinity();
      for (std::size_t f = 0; f < ne; ++f) {
        double s = 0;
        for (std::size_t k : inst.entry_rects[f]) s += w[k];
        worst = std::min(worst, s);
      }
      for (auto& x : w) x /= worst;
      const double value = std::accumulate(w.begin(), w.end(), 0.0);
      if (value < best_upper) {
        best_upper = value;
        best_weights = std::move(w);
      }
    }
    if (max_load > 0) best_lower = std::max(best_lower, static_cast<double>(packed) / static_cast<double>(max_load));
    if (best_upper <= (1.0 + eps) * best_lower) {
      out.converged = true;
      break;
    }
    ++packed;
    for (std::size_t k : inst.entry_rects[e]) {
      max_load = std::max(max_load, ++load[k]);
      const double delta = length[k] * step;
      length[k] += delta;
      for (std::size_t f : members[k]) cost[f] += delta;
    }
    if (total > 1e200) {
      for (auto& x : length) x *= 1e-200;
      recompute();
    }
  }
  out.iterations = it;
  out.value = best_lower;
  out.upper = best_upper;
  out.bits = std::log2(best_lower);
  out.weights = std::move(best_weights);
  return out;
}

AmortizedSequence amortized_sequence(const RelationMatrix& r, int n_max, std::size_t budget, double eps,
                                     std::size_t guard) {
  if (n_max < 1) throw InputError("n_max must be >= 1");
  AmortizedSequence out;
  const FractionalCover frac = fractional_cover(r, eps);
  out.fractional_bits = frac.bits;
  std::vector<BigCount> upper(static_cast<std::size_t>(n_max) + 1, 0);
  double fekete = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= n_max; ++n) {
    const RelationMatrix rn = tensor_power(r, n, guard);
    const CoverResult res = cover_number_exact(rn, budget);
    BigCount up = res.cover_number;
    for (int a = 1; a < n; ++a) {
      const BigCount split = upper[static_cast<std::size_t>(a)] * upper[static_cast<std::size_t>(n - a)];
      if (split < up) up = split;
    }
    upper[static_cast<std::size_t>(n)] = up;
    // C*(R^n) = C*(R)^n and every cover is a fractional cover
    const double frac_n = std::ceil(std::pow(frac.value, n) - 1e-9);
    BigCount low = res.lower_bound;
    if (BigCount(static_cast<unsigned long long>(frac_n)) > low) low = static_cast<unsigned long long>(frac_n);
    AmortizedRow row;
    row.n = n;
    row.upper = up;
    row.lower = low < up ? low : up;
    row.exact = res.exact || row.lower == row.upper;
    row.upper_bits = log2_count(up) / n;
    row.lower_bits = log2_count(row.lower) / n;
    fekete = std::min(fekete, row.upper_bits);
    row.fekete_bits = fekete;
    out.rows.push_back(row);
  }
  return out;
}

FoolingCheck fooling_check(const RelationMatrix& r, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  for (auto [x, y] : pairs) {
    if (x >= r.x_size() || y >= r.y_size() || !r.at(x, y)) {
      throw InputError("fooling pair (" + std::to_string(x) + ", " + std::to_string(y) + ") is not a 1-entry");
    }
  }
  FoolingCheck out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const auto [x, y] = pairs[i];
      const auto [u, v] = pairs[j];
      if (r.at(x, v) && r.at(u, y)) {
        out.violation = std::array<std::size_t, 4>{x, y, u, v};
        return out;
      }
    }
  }
  out.accepted = true;
  out.bits = pairs.empty() ? 0.0 : std::log2(static_cast<double>(pairs.size()));
  return out;
}

CoverResult neq_index_protocol(int k) {
  const RelationMatrix neq = RelationMatrix::neq(k);
  const std::size_t n = neq.x_size();
  CoverResult out;
  for (int i = 0; i < k; ++i) {
    for (std::size_t a = 0; a < 2; ++a) {
      Rectangle rect;
      for (std::size_t v = 0; v < n; ++v) {
        // bit i counted from the most significant end of the k-bit label
        const std::size_t bit = (v >> (k - 1 - i)) & 1;
        (bit == a ? rect.rows : rect.cols).push_back(v);
      }
      out.rectangles.push_back(std::move(rect));
    }
  }
  if (auto defect = cover_defect(neq, out.rectangles)) throw std::logic_error("index protocol: " + *defect);
  out.cover_number = out.rectangles.size();
  out.bits = std::log2(static_cast<double>(out.cover_number));
  out.lower_bound = 1;
  return out;
}

}  // namespace icc
