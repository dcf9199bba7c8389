#pragma once

#include <limits>
#include <string>

#include "icc/spectral.hpp"

namespace icc {

class SftPresentation;
class SoficPresentation;

/// Topological entropy in bits per symbol, or -inf for the empty shift.
class EntropyValue {
 public:
  static EntropyValue negative_infinity() { return EntropyValue(); }
  static EntropyValue from_bracket(double lower_bits, double upper_bits) {
    EntropyValue v;
    v.empty_ = false;
    v.lower_ = lower_bits;
    v.upper_ = upper_bits;
    return v;
  }

  bool is_negative_infinity() const { return empty_; }
  /// Midpoint of the certified bracket; -inf for the empty shift.
  double bits() const {
    return empty_ ? -std::numeric_limits<double>::infinity() : 0.5 * (lower_ + upper_);
  }
  double lower_bits() const { return empty_ ? bits() : lower_; }
  double upper_bits() const { return empty_ ? bits() : upper_; }
  std::string to_string() const;

 private:
  EntropyValue() = default;
  bool empty_ = true;
  double lower_ = 0.0;
  double upper_ = 0.0;
};

/// Converts a bracket on a Perron root into entropy bits.
EntropyValue entropy_from_radius(const SpectralBracket& radius, bool nonempty);

/// log2 of the spectral radius of the trimmed de Bruijn graph, bracketed to
/// within `tol` bits.
EntropyValue entropy(const SftPresentation& shift, double tol = 1e-9);

/// Entropy of a sofic shift via its subset-construction automaton, whose
/// graph is right-resolving and counts every factor exactly once.
EntropyValue entropy(const SoficPresentation& shift, double tol = 1e-9);

}  // namespace icc
