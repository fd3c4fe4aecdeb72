#pragma once

#include <cstdint>
#include <stdexcept>

namespace girr {

/// Deterministic trial-division primality test, exact for all 64-bit inputs
/// we ever feed it (thresholds stay below 2^31).
inline bool is_prime(long long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Smallest prime strictly greater than x.
inline long long next_prime_above(long long x) {
    if (x < 2) return 2;
    long long n = x + 1;
    if (n % 2 == 0) {
        if (n == 2) return 2;
        ++n;
    }
    while (!is_prime(n)) n += 2;
    return n;
}

} // namespace girr
