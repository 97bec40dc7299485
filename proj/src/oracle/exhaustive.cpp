#include "penney/oracle/exhaustive.hpp"

#include <algorithm>

#include "penney/errors.hpp"

namespace penney::oracle {

std::uint64_t ExhaustiveTally::classified_total() const {
  std::uint64_t total = avoiding_count;
  for (std::size_t j = 0; j < first_occurrence_counts.size(); ++j) {
    total += first_occurrence_counts[j] << (n - j);
  }
  return total;
}

ExhaustiveTally exhaustive_tally(const Pattern& p, std::size_t n, const ExhaustiveOptions& options) {
  const std::size_t ceiling = std::min<std::size_t>(options.ceiling, kernels::kMaxStringLength);
  if (n > ceiling) {
    throw Error(ErrorKind::TooLarge, "exhaustive enumeration of length " + std::to_string(n) +
                                         " exceeds the ceiling of " + std::to_string(ceiling));
  }
  const std::size_t m = p.length();
  if (n < m) {
    throw Error(ErrorKind::InvalidHorizon, "string length " + std::to_string(n) +
                                               " is shorter than the pattern length " +
                                               std::to_string(m));
  }

  const kernels::FirstOccurrenceJob job{static_cast<std::uint32_t>(p.to_integer()),
                                        static_cast<unsigned>(m), static_cast<unsigned>(n)};
  std::vector<std::uint64_t> histogram(n + 1, 0);
  kernels::first_occurrence_histogram(options.isa, job, 0, std::uint32_t{1} << n, histogram);

  ExhaustiveTally tally{p, n, std::vector<std::uint64_t>(n + 1, 0), histogram[0], options.isa};
  for (std::size_t j = m; j <= n; ++j) {
    // Every completion at toss j is followed by all 2^{n-j} continuations.
    tally.first_occurrence_counts[j] = histogram[j] >> (n - j);
  }
  return tally;
}

}  // namespace penney::oracle
