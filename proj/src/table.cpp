#include "penney/table.hpp"

#include <map>

#include "penney/errors.hpp"
#include "penney/waiting_time.hpp"

namespace penney {

std::vector<TableRow> waiting_time_table(std::size_t length, bool include_all) {
  if (length == 0) throw Error(ErrorKind::InvalidLength, "table length must be at least 1");
  if (length > kMaxTableLength) {
    throw Error(ErrorKind::TooLarge, "table length " + std::to_string(length) + " exceeds " +
                                         std::to_string(kMaxTableLength));
  }
  const std::uint64_t first = include_all ? 0 : std::uint64_t{1} << (length - 1);
  const std::uint64_t last = std::uint64_t{1} << length;

  std::map<BigInt, std::vector<Pattern>> groups;
  for (std::uint64_t value = first; value < last; ++value) {
    auto p = Pattern::from_integer(value, length);
    groups[expected_waiting_time(p)].push_back(std::move(p));
  }

  std::vector<TableRow> rows;
  rows.reserve(groups.size());
  for (auto& [average, patterns] : groups) {
    rows.push_back(TableRow{length, average, std::move(patterns)});
  }
  return rows;
}

}  // namespace penney
