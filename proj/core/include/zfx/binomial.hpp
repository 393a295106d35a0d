#pragma once

#include <cstdint>

namespace zfx {

// Exact subset counts. Every count here is bounded by 2^64 (n <= 64), so one unsigned word suffices.
using Count = std::uint64_t;

// C(a, b) with C(a, b) = 0 whenever b < 0 or b > a (so negative a yields 0 for b >= 0).
// Throws CapacityError if the value does not fit in Count.
Count binomial(int a, int b);

}  // namespace zfx
