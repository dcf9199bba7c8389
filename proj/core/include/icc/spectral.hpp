#pragma once

#include <cstddef>
#include <vector>

namespace icc {

/// Nonnegative square matrix in adjacency-list form. Parallel entries add up.
struct NonnegativeMatrix {
  struct Entry {
    std::size_t col;
    double weight;
  };
  std::size_t dim = 0;
  std::vector<std::vector<Entry>> rows;

  explicit NonnegativeMatrix(std::size_t n = 0) : dim(n), rows(n) {}
  void add(std::size_t row, std::size_t col, double weight = 1.0) { rows[row].push_back({col, weight}); }
  static NonnegativeMatrix from_dense(const std::vector<std::vector<double>>& m);
};

/// Two-sided certified bounds on the Perron root.
struct SpectralBracket {
  double lower = 0.0;
  double upper = 0.0;
  bool converged = true;
  double midpoint() const { return 0.5 * (lower + upper); }
};

/// Spectral radius of a nonnegative matrix.
///
/// The matrix is split into strongly connected components; each nontrivial
/// component is irreducible, so A_c + I is primitive and power iteration on it
/// drives the Collatz-Wielandt ratios min/max (Av)_i / v_i together. Iteration
/// stops once log2(upper) - log2(lower) < log2_tol (or upper - lower < log2_tol
/// when the root is below 1). A matrix with no cycle has radius exactly 0.
SpectralBracket spectral_radius(const NonnegativeMatrix& m, double log2_tol,
                                std::size_t max_iterations = 2'000'000);

/// Strongly connected components (Tarjan), in reverse topological order.
std::vector<std::vector<std::size_t>> strongly_connected_components(
    const std::vector<std::vector<std::size_t>>& adjacency);

}  // namespace icc
