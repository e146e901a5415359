#pragma once

// Small modular-arithmetic and factorization helpers shared by the
// group, graph and spectrum headers.

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace farey {

// Residue of x in [0, n).
constexpr int mod_residue(long long x, int n) {
    long long r = x % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

// Inverse of a mod n via the extended Euclidean algorithm.
inline int modular_inverse(long long a, int n) {
    if (n < 2) throw std::invalid_argument("modular_inverse: modulus must be at least 2");
    long long r0 = n, r1 = mod_residue(a, n);
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1) throw std::invalid_argument("modular_inverse: argument is not a unit");
    return mod_residue(t0, n);
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

// Prime factorization (p, exponent) with primes increasing.
inline std::vector<std::pair<long long, int>> prime_factorization(long long n) {
    if (n < 1) throw std::invalid_argument("prime_factorization: argument must be positive");
    std::vector<std::pair<long long, int>> factors;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

constexpr long long power(long long base, int exp) {
    long long r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace farey
