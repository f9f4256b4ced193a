#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "eriordan/rational.hpp"
#include "eriordan/serialize.hpp"

namespace eriordan::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsageError = 2;

struct RunConfig {
  std::size_t order = 12;
  Format format = Format::plain;
  /// Specialize results at z = value after the symbolic computation.
  std::optional<Rational> z_value;
};

/// Runs the command line `args` (args[0] is the program name). Output goes to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 on a failed
/// verification, 2 on a usage, parse or math error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eriordan::cli
