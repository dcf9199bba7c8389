#include "icc/beta.hpp"

#include <algorithm>
#include <cmath>

namespace icc {

bool parry_admissible(const std::vector<int>& digits) {
  if (digits.empty() || digits.front() < 1 || digits.back() < 1) return false;
  if (std::any_of(digits.begin(), digits.end(), [](int d) { return d < 0; })) return false;
  if (digits.size() == 1 && digits[0] == 1) return false;
  const std::size_t p = digits.size();
  for (std::size_t i = 1; i < p; ++i) {
    // compare d_{i+1} .. d_p 0^inf against d_1 .. d_p 0^inf
    int cmp = 0;
    for (std::size_t j = 0; j < p && cmp == 0; ++j) {
      const int shifted = i + j < p ? digits[i + j] : 0;
      cmp = (shifted > digits[j]) - (shifted < digits[j]);
    }
    if (cmp >= 0) return false;
  }
  return true;
}

double beta_root(const std::vector<int>& digits) {
  if (!parry_admissible(digits)) throw InputError("expansion fails the Parry condition");
  // 1 - sum d_j x^-j is increasing on x > 0
  const auto f = [&digits](double x) {
    double s = 1.0, pw = 1.0;
    for (int d : digits) {
      pw /= x;
      s -= d * pw;
    }
    return s;
  };
  double lo = 1.0, hi = digits[0] + 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

SftPresentation beta_shift(const std::vector<int>& digits) {
  if (!parry_admissible(digits)) throw InputError("expansion fails the Parry condition");
  const std::size_t p = digits.size();
  std::vector<int> s(digits);
  s.back() -= 1;
  const int top = *std::max_element(s.begin(), s.end());
  const Alphabet alphabet = Alphabet::digits(top + 1);
  std::vector<Word> forbidden;
  for (std::size_t j = 0; j < p; ++j) {
    for (int c = s[j] + 1; c <= top; ++c) {
      Word w(s.begin(), s.begin() + static_cast<long>(j));
      w.push_back(static_cast<Symbol>(c));
      forbidden.push_back(std::move(w));
    }
  }
  return build_sft(alphabet, forbidden);
}

}  // namespace icc
