#pragma once

#include <string>

namespace reconf {

// Length budgets grow like (d-1)^L and can exceed 64 bits at moderate n,
// so budget arithmetic runs in unsigned 128 bits and saturates at 2^128-1.
// A saturated value never exceeds the true bound, so comparisons of the
// form "actual <= stored bound" stay sound.
using u128 = unsigned __int128;

inline constexpr u128 kU128Max = ~u128{0};

constexpr u128 sat_add(u128 a, u128 b) {
    const u128 s = a + b;
    return s < a ? kU128Max : s;
}

constexpr u128 sat_mul(u128 a, u128 b) {
    if (a == 0 || b == 0)
        return 0;
    if (a > kU128Max / b)
        return kU128Max;
    return a * b;
}

inline std::string u128_str(u128 v) {
    if (v == 0)
        return "0";
    std::string s;
    while (v > 0) {
        s += static_cast<char>('0' + static_cast<unsigned>(v % 10));
        v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

} // namespace reconf
