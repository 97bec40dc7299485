#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string_view>

namespace penney::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kVerificationFailure = 2,
  kInternalGuard = 3,
};

enum class Format { Text, Csv, Json };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LengthRange {
  std::size_t min;
  std::size_t max;
};

/// "3" or "2..6". Throws UsageError on anything else.
LengthRange parse_length_range(std::string_view text);

/// Entry point shared by the executable and the tests. Results go to `out`
/// (or to the --output file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace penney::cli
