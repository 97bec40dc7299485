#include <cstdlib>
#include <string_view>

#include "penney/errors.hpp"
#include "penney/kernels/first_occurrence.hpp"

namespace penney::kernels {

const char* to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(PENNEY_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Isa::Neon:
#if defined(PENNEY_HAVE_NEON_KERNEL)
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (isa_available(isa)) out.push_back(isa);
  }
  return out;
}

Isa best_isa() noexcept {
  if (const char* forced = std::getenv("PENNEY_ISA"); forced && std::string_view(forced) == "scalar") {
    return Isa::Scalar;
  }
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

void first_occurrence_histogram(Isa isa, const FirstOccurrenceJob& job, std::uint32_t begin,
                                std::uint32_t end, std::span<std::uint64_t> histogram) {
  const unsigned n = job.string_length;
  const unsigned m = job.pattern_length;
  if (m < 1 || m > n || n > kMaxStringLength) {
    throw Error(ErrorKind::InvalidArgument, "kernel needs 1 <= m <= n <= 31");
  }
  if ((job.pattern_bits >> m) != 0) {
    throw Error(ErrorKind::InvalidArgument, "pattern bits wider than the pattern length");
  }
  if (histogram.size() != n + 1) {
    throw Error(ErrorKind::InvalidArgument, "histogram must have string_length + 1 slots");
  }
  if (begin > end || end > (std::uint32_t{1} << n)) {
    throw Error(ErrorKind::InvalidArgument, "enumeration range exceeds 2^n");
  }
  if (!isa_available(isa)) {
    throw Error(ErrorKind::InvalidArgument,
                std::string("kernel ") + to_string(isa) + " is not available on this machine");
  }

  switch (isa) {
    case Isa::Scalar: detail::histogram_scalar(job, begin, end, histogram); return;
#if defined(PENNEY_HAVE_AVX2_KERNEL)
    case Isa::Avx2: detail::histogram_avx2(job, begin, end, histogram); return;
#endif
#if defined(PENNEY_HAVE_NEON_KERNEL)
    case Isa::Neon: detail::histogram_neon(job, begin, end, histogram); return;
#endif
    default: break;
  }
  detail::histogram_scalar(job, begin, end, histogram);
}

}  // namespace penney::kernels
