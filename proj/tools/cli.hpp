#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "icc/types.hpp"

namespace icc::cli {

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  double tol = 1e-6;
  std::size_t guard_states = kDefaultStateGuard;
  std::size_t guard_ones = kDefaultStateGuard;
  std::uint64_t seed = 0;
  /// json, csv, or auto (csv for residuals and reproduce-paper, json otherwise).
  std::string format = "auto";
  int extend_radius = 0;
  int max_period = 0;
  std::size_t budget = 1'000'000;
};

/// Runs one subcommand. `args` excludes the program name. Exit codes: 0 ok,
/// 1 verification failure, 2 usage, input or guard error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icc::cli
