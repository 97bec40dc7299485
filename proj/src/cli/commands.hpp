#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "penney/cli/app.hpp"
#include "penney/oracle/simulate.hpp"

namespace penney::cli {

inline constexpr std::size_t kDefaultLengthCap = 12;

struct ExpectOptions {
  std::string pattern;
  std::optional<std::int64_t> stake;
  bool letters = false;
};

struct TableOptions {
  std::string lengths = "2..6";
  std::size_t cap = kDefaultLengthCap;
  bool all = false;
};

struct DistOptions {
  std::string pattern;
  std::size_t horizon = 64;
};

struct SimulateOptions {
  std::string pattern;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::uint64_t max_tosses = oracle::kDefaultMaxTossesPerGame;
};

struct VerifyOptions {
  std::string lengths = "2..6";
  std::size_t horizon = 64;
  std::size_t oracle_n = 12;
  std::size_t cap = kDefaultLengthCap;
};

// Each returns an ExitCode. Library errors propagate as penney::Error and
// bad option values as UsageError; run() maps them to exit codes.
int cmd_expect(const ExpectOptions& options, Format format, std::ostream& out);
int cmd_table(const TableOptions& options, Format format, std::ostream& out);
int cmd_dist(const DistOptions& options, Format format, std::ostream& out);
int cmd_simulate(const SimulateOptions& options, Format format, std::ostream& out);
int cmd_verify(const VerifyOptions& options, Format format, std::ostream& out);

}  // namespace penney::cli
