#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Brute-force classification kernels behind the exhaustive oracle. Every
// binary string x in [begin, end) of length n (first toss = most significant
// bit) is assigned the toss at which the pattern first completes, or 0 if it
// never does. The scalar kernel is the reference; the vector kernels must
// produce identical histograms.

namespace penney::kernels {

enum class Isa { Scalar, Avx2, Neon };

const char* to_string(Isa isa) noexcept;

/// Compiled in and supported by the running CPU.
bool isa_available(Isa isa) noexcept;
std::vector<Isa> available_isas();
/// Widest available kernel. Setting PENNEY_ISA=scalar forces the reference path.
Isa best_isa() noexcept;

/// Longest string the 32-bit lanes can enumerate.
inline constexpr unsigned kMaxStringLength = 31;

struct FirstOccurrenceJob {
  std::uint32_t pattern_bits;  // pattern read as a binary number, first toss most significant
  unsigned pattern_length;     // 1 <= m <= string_length
  unsigned string_length;      // n <= kMaxStringLength
};

/// Adds into `histogram` (size string_length + 1): slot j >= m counts strings
/// whose first completion ends at toss j, slot 0 counts strings that avoid
/// the pattern. Throws Error(InvalidArgument) on a malformed job or an
/// unavailable ISA.
void first_occurrence_histogram(Isa isa, const FirstOccurrenceJob& job, std::uint32_t begin,
                                std::uint32_t end, std::span<std::uint64_t> histogram);

namespace detail {

void histogram_scalar(const FirstOccurrenceJob& job, std::uint32_t begin, std::uint32_t end,
                      std::span<std::uint64_t> histogram);
#if defined(PENNEY_HAVE_AVX2_KERNEL)
void histogram_avx2(const FirstOccurrenceJob& job, std::uint32_t begin, std::uint32_t end,
                    std::span<std::uint64_t> histogram);
#endif
#if defined(PENNEY_HAVE_NEON_KERNEL)
void histogram_neon(const FirstOccurrenceJob& job, std::uint32_t begin, std::uint32_t end,
                    std::span<std::uint64_t> histogram);
#endif

}  // namespace detail

}  // namespace penney::kernels
