#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "icc/types.hpp"

namespace icc {

/// Finite relation R over X x Y as a boolean matrix with row and column labels.
class RelationMatrix {
 public:
  RelationMatrix() = default;
  RelationMatrix(std::size_t x_size, std::size_t y_size);
  RelationMatrix(std::vector<std::string> x_labels, std::vector<std::string> y_labels);

  static RelationMatrix from_ones(std::size_t x_size, std::size_t y_size,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& ones);
  static RelationMatrix identity(std::size_t n);
  static RelationMatrix all_ones(std::size_t x_size, std::size_t y_size);
  /// Equality and inequality on k-bit strings, labelled by the strings.
  static RelationMatrix eq(int k);
  static RelationMatrix neq(int k);

  std::size_t x_size() const { return x_labels_.size(); }
  std::size_t y_size() const { return y_labels_.size(); }
  const std::vector<std::string>& x_labels() const { return x_labels_; }
  const std::vector<std::string>& y_labels() const { return y_labels_; }

  bool at(std::size_t x, std::size_t y) const { return bits_[x * y_size() + y] != 0; }
  void set(std::size_t x, std::size_t y, bool value = true);
  std::size_t count_ones() const;
  bool empty() const { return count_ones() == 0; }
  /// 1-entries in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> ones() const;

  /// Submatrix on the listed rows and columns, in the given order.
  RelationMatrix restrict(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  bool operator==(const RelationMatrix&) const = default;

 private:
  std::vector<std::string> x_labels_;
  std::vector<std::string> y_labels_;
  std::vector<unsigned char> bits_;
};

/// rows x cols; both index lists sorted and nonempty.
struct Rectangle {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  auto operator<=>(const Rectangle&) const = default;
  bool contains(std::size_t x, std::size_t y) const;
};

/// R^n: (x, y) in R^n iff every coordinate pair lies in R. Tuples are indexed
/// in mixed radix, first coordinate most significant; labels join with ','.
RelationMatrix tensor_power(const RelationMatrix& r, int n, std::size_t guard = kDefaultStateGuard);

}  // namespace icc
