#pragma once

#include <string>
#include <vector>

namespace icc {

struct ReproCheck {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

/// Recomputes every anchored reference value.
std::vector<ReproCheck> reproduce_paper(double tol = 1e-6);

}  // namespace icc
