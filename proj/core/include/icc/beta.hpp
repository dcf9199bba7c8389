#pragma once

#include <vector>

#include "icc/sft.hpp"

namespace icc {

/// Parry condition for a finite greedy expansion d_1..d_p of 1: d_1 >= 1,
/// d_p >= 1, every proper shift of d_1..d_p 0^inf is lexicographically smaller
/// than the sequence itself, and the root exceeds 1.
bool parry_admissible(const std::vector<int>& digits);

/// The root beta > 1 of x^p = d_1 x^(p-1) + ... + d_p, by bisection.
double beta_root(const std::vector<int>& digits);

/// The beta-shift as an SFT of window p: sequences dominated at every shift by
/// the quasi-greedy expansion (d_1 .. d_{p-1} (d_p - 1))^inf. Throws
/// InputError for inadmissible expansions.
SftPresentation beta_shift(const std::vector<int>& digits);

}  // namespace icc
