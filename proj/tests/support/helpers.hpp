#pragma once

#include <set>
#include <string>
#include <vector>

#include "icc/sft.hpp"
#include "oracles.hpp"

namespace testing_support {

inline icc::SftPresentation to_sft(const oracle::ForbiddenShift& s) {
  return icc::build_sft(icc::Alphabet::digits(s.k), s.forbidden);
}

/// Digits of a string as symbols of Alphabet::digits.
inline icc::Word digits(const std::string& s) {
  icc::Word w;
  for (char c : s) w.push_back(static_cast<icc::Symbol>(c - '0'));
  return w;
}

inline std::set<icc::Word> as_set(const std::vector<icc::Word>& words) { return {words.begin(), words.end()}; }

}  // namespace testing_support
