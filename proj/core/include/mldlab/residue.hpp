#pragma once

#include <numeric>
#include <utility>

namespace mldlab {

/// Smallest non-negative residue of n modulo r (r >= 1). Total: works for
/// negative n.
inline long long residue(long long n, long long r) {
    long long m = n % r;
    return m < 0 ? m + r : m;
}

inline long long gcd_ll(long long a, long long b) {
    return std::gcd(a, b);
}

/// residue(x) lifted into [1, r]: 0 maps to r, everything else is itself.
inline long long lift_residue(long long x, long long r) {
    return x == 0 ? r : x;
}

} // namespace mldlab
