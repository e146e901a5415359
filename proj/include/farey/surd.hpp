#pragma once

// Exact reals of the form z*sqrt(s) with z integer and s squarefree
// positive. Every eigenvalue handled by the closed-form spectra has this
// shape, so spectra never touch floating point until rendered.

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace farey {

// Canonical zero is (0, 1), so field-wise equality is value equality.
struct Surd {
    long long z = 0;
    long long s = 1;

    friend constexpr bool operator==(const Surd&, const Surd&) = default;
};

// Normalize by moving the largest square divisor of s into z.
inline Surd make_surd(long long z, long long s) {
    if (s < 1) throw std::invalid_argument("make_surd: radicand must be positive");
    if (z == 0) return {0, 1};
    for (long long f = 2; f * f <= s; ++f) {
        while (s % (f * f) == 0) {
            s /= f * f;
            z *= f;
        }
    }
    return {z, s};
}

// (z1 sqrt(s1))(z2 sqrt(s2)) = z1 z2 g sqrt((s1/g)(s2/g)) with g = gcd(s1, s2).
// The product of coprime squarefree numbers is squarefree, so no
// renormalization is needed.
inline Surd surd_multiply(const Surd& x, const Surd& y) {
    long long z = x.z * y.z;
    if (z == 0) return {0, 1};
    long long g = std::gcd(x.s, y.s);
    return {z * g, (x.s / g) * (y.s / g)};
}

inline Surd operator-(const Surd& x) { return {-x.z, x.s}; }

inline Surd surd_abs(const Surd& x) { return {x.z < 0 ? -x.z : x.z, x.s}; }

inline double surd_value(const Surd& x) {
    return static_cast<double>(x.z) * std::sqrt(static_cast<double>(x.s));
}

// Exact value order: compare signs, then z^2 s in 128-bit.
inline bool surd_less(const Surd& x, const Surd& y) {
    int sx = (x.z > 0) - (x.z < 0);
    int sy = (y.z > 0) - (y.z < 0);
    if (sx != sy) return sx < sy;
    if (sx == 0) return false;
    __int128 mx = static_cast<__int128>(x.z) * x.z * x.s;
    __int128 my = static_cast<__int128>(y.z) * y.z * y.s;
    return sx > 0 ? mx < my : mx > my;
}

struct SurdLess {
    bool operator()(const Surd& x, const Surd& y) const { return surd_less(x, y); }
};

// "z√s" with the unit coefficient and the trivial radicand suppressed.
inline std::string surd_to_string(const Surd& x) {
    if (x.s == 1) return std::to_string(x.z);
    std::string root = "√" + std::to_string(x.s);
    if (x.z == 1) return root;
    if (x.z == -1) return "-" + root;
    return std::to_string(x.z) + root;
}

}  // namespace farey
