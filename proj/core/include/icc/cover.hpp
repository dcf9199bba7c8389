#pragma once

#include <array>
#include <optional>
#include <vector>

#include "icc/relation.hpp"

namespace icc {

/// A cover of R by 1-rectangles; equivalently a nondeterministic protocol
/// whose messages are the rectangles.
struct CoverResult {
  std::vector<Rectangle> rectangles;
  std::size_t cover_number = 0;
  double bits = 0.0;  // log2(cover_number)
  bool exact = false;
  /// Proven lower bound on the minimum cover size.
  std::size_t lower_bound = 0;
  std::size_t nodes = 0;
};

/// Inclusion-maximal 1-rectangles, sorted. Throws InputError on an empty
/// relation.
std::vector<Rectangle> maximal_rectangles(const RelationMatrix& r, std::size_t guard = kDefaultStateGuard);

/// Empty if the rectangles are all inside R and cover every 1-entry; otherwise
/// a description of the first defect.
std::optional<std::string> cover_defect(const RelationMatrix& r, const std::vector<Rectangle>& rectangles);

/// Minimum cover by branch and bound over maximal rectangles. `budget` caps
/// the number of search nodes; when it runs out the best cover found is
/// returned with exact = false.
CoverResult cover_number_exact(const RelationMatrix& r, std::size_t budget = 1'000'000);

/// Greedy set cover over maximal rectangles, ties to the lowest index.
CoverResult cover_number_greedy(const RelationMatrix& r);

struct FractionalCover {
  /// Certified lower bound on the LP optimum C*(R); within (1+eps) of it
  /// when converged.
  double value = 0.0;
  /// Certified upper bound (value of the returned primal weights).
  double upper = 0.0;
  double bits = 0.0;  // log2(value)
  bool converged = false;
  std::size_t iterations = 0;
  std::vector<Rectangle> rectangles;
  std::vector<double> weights;
};

/// Fractional cover number over maximal rectangles, by multiplicative weights
/// on the dual packing LP. Both bounds are certified by feasible solutions.
FractionalCover fractional_cover(const RelationMatrix& r, double eps = 1e-3,
                                 std::size_t max_iterations = 50'000'000);

struct AmortizedRow {
  int n = 0;
  BigCount upper = 0;
  BigCount lower = 0;
  bool exact = false;
  double upper_bits = 0.0;   // log2(upper) / n
  double lower_bits = 0.0;   // log2(lower) / n
  double fekete_bits = 0.0;  // minimum of upper_bits over 1..n
};

struct AmortizedSequence {
  std::vector<AmortizedRow> rows;
  double fractional_bits = 0.0;  // log2 C*(R), the limit
};

/// Per-n brackets on log2 C(R^n) / n. Upper bounds are the searched covers
/// tightened by C(R^(a+b)) <= C(R^a) C(R^b); lower bounds take the larger of
/// the search bound and C*(R)^n.
AmortizedSequence amortized_sequence(const RelationMatrix& r, int n_max, std::size_t budget = 1'000'000,
                                     double eps = 1e-3, std::size_t guard = kDefaultStateGuard);

struct FoolingCheck {
  bool accepted = false;
  double bits = 0.0;  // log2 |F| when accepted
  /// Violating pairs (x, y), (x', y') with R(x, y') and R(x', y) both true.
  std::optional<std::array<std::size_t, 4>> violation;
};

/// Checks the finite fooling-set condition. Throws InputError if a pair is
/// not a 1-entry.
FoolingCheck fooling_check(const RelationMatrix& r, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

/// Cover of NEQ on k-bit strings by the 2k rectangles {x_i = a} x {y_i != a}.
CoverResult neq_index_protocol(int k);

}  // namespace icc
