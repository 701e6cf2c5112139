#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "repwords/rational.hpp"

namespace repwords::cli {

enum ExitCode : int { kSuccess = 0, kFailed = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "P/Q" or "P" in lowest terms. With `threshold`, values <= 1 are rejected.
/// Throws UsageError.
Rational parse_rational(std::string_view text, bool threshold = false);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Exit 0 on success, 1 when a check fails or a claim is
/// refuted, 2 on usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace repwords::cli
