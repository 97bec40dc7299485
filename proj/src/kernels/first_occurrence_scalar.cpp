#include "penney/kernels/first_occurrence.hpp"

namespace penney::kernels::detail {

void histogram_scalar(const FirstOccurrenceJob& job, std::uint32_t begin, std::uint32_t end,
                      std::span<std::uint64_t> histogram) {
  const unsigned n = job.string_length;
  const unsigned m = job.pattern_length;
  const std::uint32_t mask = (std::uint32_t{1} << m) - 1;
  for (std::uint32_t x = begin; x < end; ++x) {
    unsigned slot = 0;
    for (unsigned j = m; j <= n; ++j) {
      if (((x >> (n - j)) & mask) == job.pattern_bits) {
        slot = j;
        break;
      }
    }
    ++histogram[slot];
  }
}

}  // namespace penney::kernels::detail
