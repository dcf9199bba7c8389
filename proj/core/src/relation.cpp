#include "icc/relation.hpp"

#include <algorithm>

namespace icc {

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::vector<std::string> bit_strings(int k) {
  if (k < 1 || k > 20) throw InputError("bit length must be in [1, 20]");
  std::vector<std::string> out;
  for (std::size_t v = 0; v < (std::size_t{1} << k); ++v) {
    std::string s;
    for (int i = k - 1; i >= 0; --i) s.push_back((v >> i) & 1 ? '1' : '0');
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

RelationMatrix::RelationMatrix(std::size_t x_size, std::size_t y_size)
    : RelationMatrix(numbered(x_size), numbered(y_size)) {}

RelationMatrix::RelationMatrix(std::vector<std::string> x_labels, std::vector<std::string> y_labels)
    : x_labels_(std::move(x_labels)), y_labels_(std::move(y_labels)) {
  if (x_labels_.empty() || y_labels_.empty()) throw InputError("relation dimensions must be positive");
  bits_.assign(x_labels_.size() * y_labels_.size(), 0);
}

RelationMatrix RelationMatrix::from_ones(std::size_t x_size, std::size_t y_size,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& ones) {
  RelationMatrix r(x_size, y_size);
  for (auto [x, y] : ones) r.set(x, y);
  return r;
}

RelationMatrix RelationMatrix::identity(std::size_t n) {
  RelationMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

RelationMatrix RelationMatrix::all_ones(std::size_t x_size, std::size_t y_size) {
  RelationMatrix r(x_size, y_size);
  std::fill(r.bits_.begin(), r.bits_.end(), 1);
  return r;
}

RelationMatrix RelationMatrix::eq(int k) {
  RelationMatrix r(bit_strings(k), bit_strings(k));
  for (std::size_t i = 0; i < r.x_size(); ++i) r.set(i, i);
  return r;
}

RelationMatrix RelationMatrix::neq(int k) {
  RelationMatrix r(bit_strings(k), bit_strings(k));
  for (std::size_t i = 0; i < r.x_size(); ++i) {
    for (std::size_t j = 0; j < r.y_size(); ++j) r.set(i, j, i != j);
  }
  return r;
}

void RelationMatrix::set(std::size_t x, std::size_t y, bool value) {
  if (x >= x_size() || y >= y_size()) throw InputError("relation entry out of range");
  bits_[x * y_size() + y] = value ? 1 : 0;
}

std::size_t RelationMatrix::count_ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<std::pair<std::size_t, std::size_t>> RelationMatrix::ones() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < x_size(); ++x) {
    for (std::size_t y = 0; y < y_size(); ++y) {
      if (at(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

RelationMatrix RelationMatrix::restrict(const std::vector<std::size_t>& rows,
                                        const std::vector<std::size_t>& cols) const {
  std::vector<std::string> xl, yl;
  for (std::size_t x : rows) xl.push_back(x_labels_.at(x));
  for (std::size_t y : cols) yl.push_back(y_labels_.at(y));
  RelationMatrix r(std::move(xl), std::move(yl));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) r.set(i, j, at(rows[i], cols[j]));
  }
  return r;
}

bool Rectangle::contains(std::size_t x, std::size_t y) const {
  return std::binary_search(rows.begin(), rows.end(), x) && std::binary_search(cols.begin(), cols.end(), y);
}

RelationMatrix tensor_power(const RelationMatrix& r, int n, std::size_t guard) {
  if (n < 1) throw InputError("tensor power exponent must be >= 1");
  double cells = 1.0;
  std::size_t xs = 1, ys = 1;
  for (int i = 0; i < n; ++i) {
    cells *= static_cast<double>(r.x_size()) * static_cast<double>(r.y_size());
    if (cells > static_cast<double>(guard)) {
      throw GuardError("tensor power " + std::to_string(n) + " of a " + std::to_string(r.x_size()) + "x" +
                       std::to_string(r.y_size()) + " relation exceeds the guard of " + std::to_string(guard) +
                       " cells");
    }
    xs *= r.x_size();
    ys *= r.y_size();
  }
  auto labels = [n](const std::vector<std::string>& base, std::size_t total) {
    std::vector<std::string> out(total);
    for (std::size_t v = 0; v < total; ++v) {
      std::string s;
      std::size_t rest = v, stride = total;
      for (int i = 0; i < n; ++i) {
        stride /= base.size();
        if (i) s.push_back(',');
        s += base[rest / stride];
        rest %= stride;
      }
      out[v] = std::move(s);
    }
    return out;
  };
  RelationMatrix out(labels(r.x_labels(), xs), labels(r.y_labels(), ys));
  for (std::size_t x = 0; x < xs; ++x) {
    for (std::size_t y = 0; y < ys; ++y) {
      bool all = true;
      std::size_t rx = x, ry = y;
      for (int i = 0; i < n && all; ++i) {
        all = r.at(rx % r.x_size(), ry % r.y_size());
        rx /= r.x_size();
        ry /= r.y_size();
      }
      if (all) out.set(x, y);
    }
  }
  return out;
}

}  // namespace icc
