#include "penney/oracle/simulate.hpp"

#include <cmath>
#include <random>

#include "penney/errors.hpp"

namespace penney::oracle {

namespace {

class FairBits {
 public:
  explicit FairBits(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() {
    if (remaining_ == 0) {
      buffer_ = engine_();
      remaining_ = 64;
    }
    --remaining_;
    return (buffer_ >> remaining_) & 1U;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t buffer_ = 0;
  unsigned remaining_ = 0;
};

}  // namespace

SimulationResult simulate(const Pattern& p, std::uint64_t trials, std::uint64_t seed,
                          std::uint64_t max_tosses_per_game) {
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "need at least one trial");
  const std::size_t m = p.length();
  const std::uint64_t target = p.to_integer();
  const std::uint64_t mask = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;

  FairBits bits(seed);
  unsigned __int128 sum = 0;
  unsigned __int128 sum_sq = 0;
  std::uint64_t longest = 0;

  for (std::uint64_t t = 0; t < trials; ++t) {
    std::uint64_t window = 0;
    std::uint64_t tosses = 0;
    while (true) {
      window = ((window << 1) | bits.next()) & mask;
      ++tosses;
      if (tosses >= m && window == target) break;
      if (tosses >= max_tosses_per_game) {
        throw Error(ErrorKind::SafetyCapExceeded,
                    "game exceeded " + std::to_string(max_tosses_per_game) + " tosses");
      }
    }
    sum += tosses;
    sum_sq += static_cast<unsigned __int128>(tosses) * tosses;
    if (tosses > longest) longest = tosses;
  }

  const auto n = static_cast<long double>(trials);
  const long double mean = static_cast<long double>(sum) / n;
  long double stderr_value = 0;
  if (trials > 1) {
    // (sum_sq - sum^2/n) / (n - 1), with the subtraction done in exact integers
    const unsigned __int128 scaled = sum_sq * trials - sum * sum;
    const long double variance = static_cast<long double>(scaled) / (n * (n - 1));
    stderr_value = std::sqrt(variance / n);
  }
  return SimulationResult{p,
                          trials,
                          seed,
                          "mt19937_64",
                          static_cast<double>(mean),
                          static_cast<double>(stderr_value),
                          longest};
}

}  // namespace penney::oracle
