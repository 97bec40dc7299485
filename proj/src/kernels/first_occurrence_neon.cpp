#include <arm_neon.h>

#include "penney/kernels/first_occurrence.hpp"

namespace penney::kernels::detail {

void histogram_neon(const FirstOccurrenceJob& job, std::uint32_t begin, std::uint32_t end,
                    std::span<std::uint64_t> histogram) {
  const unsigned n = job.string_length;
  const unsigned m = job.pattern_length;
  const uint32x4_t mask = vdupq_n_u32((std::uint32_t{1} << m) - 1);
  const uint32x4_t target = vdupq_n_u32(job.pattern_bits);
  const std::uint32_t lane_init[4] = {0, 1, 2, 3};
  const uint32x4_t lane = vld1q_u32(lane_init);

  std::uint32_t x = begin;
  for (; end - x >= 4; x += 4) {
    const uint32x4_t strings = vaddq_u32(vdupq_n_u32(x), lane);
    uint32x4_t found = vdupq_n_u32(0);
    for (unsigned j = m; j <= n; ++j) {
      // vshlq with a negative count shifts right
      const int32x4_t shift = vdupq_n_s32(-static_cast<int>(n - j));
      const uint32x4_t window = vandq_u32(vshlq_u32(strings, shift), mask);
      const uint32x4_t hit = vceqq_u32(window, target);
      const uint32x4_t fresh = vbicq_u32(hit, found);
      found = vorrq_u32(found, hit);
      histogram[j] += vaddvq_u32(vshrq_n_u32(fresh, 31));
      if (vminvq_u32(found) == 0xFFFFFFFFU) break;
    }
    histogram[0] += 4U - vaddvq_u32(vshrq_n_u32(found, 31));
  }
  if (x < end) histogram_scalar(job, x, end, histogram);
}

}  // namespace penney::kernels::detail
