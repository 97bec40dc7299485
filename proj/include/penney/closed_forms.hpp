#pragma once

#include <cstddef>

#include "penney/bigint.hpp"
#include "penney/pattern.hpp"

namespace penney {

/// F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}.
BigInt fibonacci(std::size_t n);

/// The four patterns whose first-termination counts have hand-derived closed forms.
enum class ClosedFormFamily { TailHead, HeadHead, HeadTailTail, HeadHeadTail };

Pattern family_pattern(ClosedFormFamily family);

/// Number of length-n strings whose only occurrence of the family pattern is
/// at the right end:
///   01        -> n - 1
///   11        -> F_{n-1}
///   100, 110  -> F_n - 1
/// Throws Error(InvalidIndex) when n is shorter than the pattern.
BigInt closed_form_tau(ClosedFormFamily family, std::size_t n);

}  // namespace penney
