#include "icc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace icc {

NonnegativeMatrix NonnegativeMatrix::from_dense(const std::vector<std::vector<double>>& m) {
  NonnegativeMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[i][j] < 0) throw std::invalid_argument("matrix must be nonnegative");
      if (m[i][j] > 0) out.add(i, j, m[i][j]);
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(
    const std::vector<std::vector<std::size_t>>& adjacency) {
  const std::size_t n = adjacency.size();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnset), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  // iterative Tarjan; frames hold (vertex, next edge position)
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < adjacency[v].size()) {
        const std::size_t w = adjacency[v][pos++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
      const std::size_t finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        auto& parent = frames.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return components;
}

namespace {

bool bracket_tight(double lo, double hi, double tol) {
  if (lo >= 1.0) return std::log2(hi) - std::log2(lo) < tol;
  return hi - lo < tol;
}

// Perron root of an irreducible block given as local adjacency.
SpectralBracket irreducible_radius(const std::vector<std::vector<NonnegativeMatrix::Entry>>& rows,
                                   double tol, std::size_t max_iterations) {
  const std::size_t n = rows.size();
  std::vector<double> v(n, 1.0), w(n);
  SpectralBracket best{0.0, std::numeric_limits<double>::infinity(), false};
  for (std::size_t it = 0; it < max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = v[i];  // the +I shift
      for (const auto& e : rows[i]) acc += e.weight * v[e.col];
      w[i] = acc;
    }
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0, top = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = w[i] / v[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      top = std::max(top, w[i]);
    }
    // bounds on rho(A + I); both are valid at every step for positive v
    best.lower = std::max(best.lower, lo - 1.0);
    best.upper = std::min(best.upper, hi - 1.0);
    if (bracket_tight(best.lower, best.upper, tol)) {
      best.converged = true;
      return best;
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / top;
  }
  return best;
}

}  // namespace

SpectralBracket spectral_radius(const NonnegativeMatrix& m, double log2_tol,
                                std::size_t max_iterations) {
  if (!(log2_tol > 0)) throw std::invalid_argument("tolerance must be positive");
  std::vector<std::vector<std::size_t>> adjacency(m.dim);
  for (std::size_t i = 0; i < m.dim; ++i) {
    for (const auto& e : m.rows[i]) {
      if (e.weight < 0) throw std::invalid_argument("matrix must be nonnegative");
      if (e.weight > 0) adjacency[i].push_back(e.col);
    }
  }
  SpectralBracket result{0.0, 0.0, true};
  std::vector<std::size_t> local(m.dim, 0);
  std::vector<long> owner(m.dim, -1);
  const auto components = strongly_connected_components(adjacency);
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& comp = components[c];
    for (std::size_t k = 0; k < comp.size(); ++k) {
      local[comp[k]] = k;
      owner[comp[k]] = static_cast<long>(c);
    }
    std::vector<std::vector<NonnegativeMatrix::Entry>> rows(comp.size());
    bool has_cycle = false;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (const auto& e : m.rows[comp[k]]) {
        if (e.weight > 0 && owner[e.col] == static_cast<long>(c)) {
          rows[k].push_back({local[e.col], e.weight});
          has_cycle = true;
        }
      }
    }
    if (!has_cycle) continue;  // trivial component contributes radius 0
    const SpectralBracket b = irreducible_radius(rows, log2_tol, max_iterations);
    result.lower = std::max(result.lower, b.lower);
    result.upper = std::max(result.upper, b.upper);
    result.converged = result.converged && b.converged;
  }
  return result;
}

}  // namespace icc
