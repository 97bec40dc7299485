// Built with -mavx2; only called after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "penney/kernels/first_occurrence.hpp"

namespace penney::kernels::detail {

namespace {

inline int lane_mask(__m256i v) { return _mm256_movemask_ps(_mm256_castsi256_ps(v)); }

}  // namespace

void histogram_avx2(const FirstOccurrenceJob& job, std::uint32_t begin, std::uint32_t end,
                    std::span<std::uint64_t> histogram) {
  const unsigned n = job.string_length;
  const unsigned m = job.pattern_length;
  const __m256i mask = _mm256_set1_epi32(static_cast<int>((std::uint32_t{1} << m) - 1));
  const __m256i target = _mm256_set1_epi32(static_cast<int>(job.pattern_bits));
  const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);

  std::uint32_t x = begin;
  for (; end - x >= 8; x += 8) {
    const __m256i strings = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(x)), lane);
    __m256i found = _mm256_setzero_si256();
    for (unsigned j = m; j <= n; ++j) {
      const __m128i shift = _mm_cvtsi32_si128(static_cast<int>(n - j));
      const __m256i window = _mm256_and_si256(_mm256_srl_epi32(strings, shift), mask);
      const __m256i hit = _mm256_cmpeq_epi32(window, target);
      const __m256i fresh = _mm256_andnot_si256(found, hit);
      found = _mm256_or_si256(found, hit);
      histogram[j] += static_cast<unsigned>(std::popcount(static_cast<unsigned>(lane_mask(fresh))));
      if (lane_mask(found) == 0xFF) break;
    }
    histogram[0] += 8U - static_cast<unsigned>(std::popcount(static_cast<unsigned>(lane_mask(found))));
  }
  if (x < end) histogram_scalar(job, x, end, histogram);
}

}  // namespace penney::kernels::detail
