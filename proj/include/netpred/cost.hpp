#pragma once

#include <cassert>
#include <cstdint>
#include <limits>

namespace netpred {

// All costs are scaled 64-bit integers; the scale denominator lives in the
// instance file. Every budget/threshold comparison in the framework is done
// on these integers, so runs are reproducible bit-for-bit.
using Cost = std::int64_t;

inline constexpr Cost kInfCost = std::numeric_limits<Cost>::max();

inline constexpr bool is_inf(Cost c) { return c == kInfCost; }

// Saturating addition: inf absorbs, finite sums must not overflow.
inline Cost add_cost(Cost a, Cost b) {
    assert(a >= 0 && b >= 0);
    if (a == kInfCost || b == kInfCost) return kInfCost;
    assert(a <= kInfCost - b);
    return a + b;
}

inline Cost mul_cost(Cost a, Cost b) {
    assert(a >= 0 && b >= 0);
    if (a == 0 || b == 0) return 0;
    if (a == kInfCost || b == kInfCost) return kInfCost;
    assert(a <= kInfCost / b);
    return a * b;
}

// max(a - b, 0) with inf handled; used by the facility-location potentials.
inline Cost pos_sub(Cost a, Cost b) {
    if (b == kInfCost) return 0;
    if (a == kInfCost) return kInfCost;
    return a > b ? a - b : 0;
}

// floor(log2(num/den)) for positive rationals; used by penalty scan bounds
// and the Berman-Coulston level index.
inline int floor_log2_ratio(Cost num, Cost den) {
    assert(num > 0 && den > 0);
    int k = 0;
    __int128 n = num, d = den;
    if (n >= d) {
        while (n >= 2 * d) {
            d *= 2;
            ++k;
        }
        return k;
    }
    while (n < d) {
        n *= 2;
        --k;
    }
    return k;
}

inline int floor_log2(Cost v) {
    assert(v > 0);
    int k = 0;
    while (v > 1) {
        v >>= 1;
        ++k;
    }
    return k;
}

inline int ceil_log2(Cost v) {
    assert(v > 0);
    int k = floor_log2(v);
    return (Cost(1) << k) == v ? k : k + 1;
}

}  // namespace netpred
