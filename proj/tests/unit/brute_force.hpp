#pragma once

// Test-only reference computations. Nothing here touches the automaton, the
// counting engine or the enumeration kernels, so they can serve as
// independent ground truth for all three.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace brute {

inline std::string bit_string(std::uint64_t value, std::size_t length) {
  std::string s(length, '0');
  for (std::size_t i = 0; i < length; ++i) {
    if ((value >> (length - 1 - i)) & 1U) s[i] = '1';
  }
  return s;
}

/// Every binary pattern of length 1..max_length.
inline std::vector<std::string> all_patterns(std::size_t max_length) {
  std::vector<std::string> out;
  for (std::size_t m = 1; m <= max_length; ++m) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) out.push_back(bit_string(v, m));
  }
  return out;
}

struct Counts {
  std::vector<std::uint64_t> sigma;  // strings of length n avoiding the pattern
  std::vector<std::uint64_t> tau;    // strings of length n whose only occurrence ends at n
};

/// Enumerates every string of length n <= max_n as text and searches it
/// with std::string::find.
inline Counts enumerate(const std::string& pattern, std::size_t max_n) {
  Counts c{std::vector<std::uint64_t>(max_n + 1, 0), std::vector<std::uint64_t>(max_n + 1, 0)};
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      const auto s = bit_string(v, n);
      const auto at = s.find(pattern);
      if (at == std::string::npos) {
        ++c.sigma[n];
      } else if (at + pattern.size() == n) {
        ++c.tau[n];
      }
    }
  }
  return c;
}

/// Strings M_n(pattern; suffix) of length n ending in the given bits and free
/// of the pattern, evolved with the hand-written two-state (doubles) and
/// four-state (triples) recursions for 01, 11, 100 and 110. Returns
/// tau_n = K_n for n = 0..max_n, where a string first completes the pattern
/// at n iff its first n-1 bits avoid it and end in the pattern's first m-1
/// bits.
inline std::vector<std::uint64_t> hand_recursion_tau(const std::string& pattern, std::size_t max_n) {
  std::vector<std::uint64_t> tau(max_n + 1, 0);
  if (pattern == "01" || pattern == "11") {
    // M[j]: length-n strings avoiding the pattern and ending in bit j.
    std::uint64_t m0 = 1, m1 = 1;  // n = 1
    for (std::size_t n = 2; n <= max_n; ++n) {
      tau[n] = pattern == "01" ? m0 : m1;
      std::uint64_t n0, n1;
      if (pattern == "01") {
        n0 = m0 + m1;
        n1 = m1;
      } else {
        n0 = m0 + m1;
        n1 = m0;
      }
      m0 = n0;
      m1 = n1;
    }
    return tau;
  }
  // Indexed by the last two bits: 00, 01, 10, 11. Start at n = 2.
  std::uint64_t m00 = 1, m01 = 1, m10 = 1, m11 = 1;
  for (std::size_t n = 3; n <= max_n; ++n) {
    std::uint64_t a, b, c, d;
    if (pattern == "100") {
      tau[n] = m10;
      a = m00;
      b = m00 + m10;
      c = m01 + m11;
      d = m01 + m11;
    } else {  // 110
      tau[n] = m11;
      a = m00 + m10;
      b = m00 + m10;
      c = m01;
      d = m01 + m11;
    }
    m00 = a;
    m01 = b;
    m10 = c;
    m11 = d;
  }
  return tau;
}

/// c_j by its operational meaning: some history S followed by the first j
/// pattern bits already ends with the whole pattern. Checked by appending
/// prefixes to every history of length m and searching the result.
inline std::vector<int> operational_correlation(const std::string& pattern) {
  const std::size_t m = pattern.size();
  std::vector<int> c(m, 0);
  for (std::size_t j = 1; j <= m; ++j) {
    for (std::uint64_t h = 0; h < (std::uint64_t{1} << m) && !c[j - 1]; ++h) {
      const std::string truncated = bit_string(h, m) + pattern.substr(0, j);
      if (truncated.compare(truncated.size() - m, m, pattern) == 0) c[j - 1] = 1;
    }
  }
  return c;
}

/// Longest prefix of `pattern` that is a suffix of `text`, by direct comparison.
inline std::size_t longest_prefix_suffix(const std::string& pattern, const std::string& text) {
  for (std::size_t k = std::min(pattern.size(), text.size()); k > 0; --k) {
    if (text.compare(text.size() - k, k, pattern, 0, k) == 0) return k;
  }
  return 0;
}

inline std::uint64_t fibonacci(std::size_t n) {
  std::uint64_t a = 0, b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return a;
}

}  // namespace brute
