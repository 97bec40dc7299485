#pragma once

#include <cstddef>
#include <vector>

#include "penney/bigint.hpp"
#include "penney/pattern.hpp"

namespace penney {

/// All patterns of one length that share the same expected waiting time.
struct TableRow {
  std::size_t length;
  BigInt average;
  /// Ascending as binary numbers.
  std::vector<Pattern> patterns;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Longest length waiting_time_table will enumerate.
inline constexpr std::size_t kMaxTableLength = 30;

/// Groups the patterns of `length` by expected waiting time, groups ordered
/// by ascending average. By default only patterns starting with 1 are
/// enumerated; complementing a pattern never changes its average.
/// Throws Error(InvalidLength) for length 0 and Error(TooLarge) beyond kMaxTableLength.
std::vector<TableRow> waiting_time_table(std::size_t length, bool include_all = false);

}  // namespace penney
