#pragma once

// PSL2(Z/nZ) as canonical 2x2 matrices: each group element is the pair
// {M, -M} of unit-determinant matrices mod n, stored as the
// lexicographically smaller representative so that comparison and hashing
// are structural.

#include "farey/modular.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace farey {

// Full group enumeration is quartic in n; keep it to small levels.
inline constexpr int kDartCap = 30;

struct ProjectiveMatrix {
    int n = 2;
    int a = 1, b = 0, c = 0, d = 1;

    friend constexpr bool operator==(const ProjectiveMatrix&, const ProjectiveMatrix&) = default;
    friend constexpr auto operator<=>(const ProjectiveMatrix&, const ProjectiveMatrix&) = default;
};

// Reduce entries mod n, check det = 1, and pick the smaller of {M, -M}.
inline ProjectiveMatrix canonicalize(long long a, long long b, long long c, long long d, int n) {
    if (n < 2) throw std::invalid_argument("canonicalize: modulus must be at least 2");
    int ra = mod_residue(a, n), rb = mod_residue(b, n);
    int rc = mod_residue(c, n), rd = mod_residue(d, n);
    long long det = static_cast<long long>(ra) * rd - static_cast<long long>(rb) * rc;
    if (mod_residue(det, n) != 1 % n)
        throw std::invalid_argument("canonicalize: determinant must be 1 (mod n)");
    std::array<int, 4> pos{ra, rb, rc, rd};
    std::array<int, 4> neg{ra ? n - ra : 0, rb ? n - rb : 0, rc ? n - rc : 0, rd ? n - rd : 0};
    const std::array<int, 4>& rep = std::min(pos, neg);
    return {n, rep[0], rep[1], rep[2], rep[3]};
}

inline ProjectiveMatrix psl2_identity(int n) { return canonicalize(1, 0, 0, 1, n); }

// The two standard generators: X has order 3, Y is the unipotent shift.
inline ProjectiveMatrix generator_x(int n) { return canonicalize(0, 1, -1, 1, n); }
inline ProjectiveMatrix generator_y(int n) { return canonicalize(1, 1, 0, 1, n); }

inline ProjectiveMatrix multiply(const ProjectiveMatrix& g, const ProjectiveMatrix& h) {
    if (g.n != h.n) throw std::invalid_argument("multiply: modulus mismatch");
    return canonicalize(static_cast<long long>(g.a) * h.a + static_cast<long long>(g.b) * h.c,
                        static_cast<long long>(g.a) * h.b + static_cast<long long>(g.b) * h.d,
                        static_cast<long long>(g.c) * h.a + static_cast<long long>(g.d) * h.c,
                        static_cast<long long>(g.c) * h.b + static_cast<long long>(g.d) * h.d,
                        g.n);
}

// Adjugate; inverse because det = 1.
inline ProjectiveMatrix inverse(const ProjectiveMatrix& g) {
    return canonicalize(g.d, -g.b, -g.c, g.a, g.n);
}

// Entrywise reduction to a divisor level m | n.
inline ProjectiveMatrix reduce(const ProjectiveMatrix& g, int m) {
    if (m < 2 || g.n % m != 0)
        throw std::invalid_argument("reduce: target modulus must divide n");
    return canonicalize(g.a, g.b, g.c, g.d, m);
}

// |PSL2(Z/nZ)| = n^3 prod_{p | n} (1 - 1/p^2) / 2 for n > 2; the halving is
// absent at n = 2 where -I = I, giving order 6.
inline long long psl2_order(int n) {
    if (n < 2) throw std::invalid_argument("psl2_order: modulus must be at least 2");
    if (n == 2) return 6;
    long long order = static_cast<long long>(n) * n * n;
    for (const auto& [p, e] : prime_factorization(n))
        order = order / (p * p) * (p * p - 1);
    return order / 2;
}

namespace detail {

inline std::uint64_t pack_matrix(const ProjectiveMatrix& g) {
    std::uint64_t n = static_cast<std::uint64_t>(g.n);
    return ((static_cast<std::uint64_t>(g.a) * n + g.b) * n + g.c) * n + g.d;
}

}  // namespace detail

// Breadth-first closure of {X, Y} from the identity, sorted. The size is
// checked against the closed-form order, certifying <X, Y> = PSL2(Z/nZ).
inline std::vector<ProjectiveMatrix> enumerate_group(int n, int cap = kDartCap) {
    if (n < 2) throw std::invalid_argument("enumerate_group: modulus must be at least 2");
    if (n > cap) throw std::invalid_argument("enumerate_group: level exceeds the enumeration cap");
    const std::array<ProjectiveMatrix, 2> gens{generator_x(n), generator_y(n)};
    std::vector<ProjectiveMatrix> elements{psl2_identity(n)};
    std::unordered_set<std::uint64_t> seen{detail::pack_matrix(elements[0])};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        ProjectiveMatrix g = elements[head];
        for (const ProjectiveMatrix& s : gens) {
            ProjectiveMatrix next = multiply(g, s);
            if (seen.insert(detail::pack_matrix(next)).second) elements.push_back(next);
        }
    }
    if (static_cast<long long>(elements.size()) != psl2_order(n))
        throw std::logic_error("enumerate_group: generators did not close to the full group");
    std::sort(elements.begin(), elements.end());
    return elements;
}

// Number of level-n elements reducing to the identity at level m. Measured
// by enumeration, not assumed from a formula; it always equals
// psl2_order(n) / psl2_order(m) because reduction is surjective.
inline long long kernel_size(int n, int m, int cap = kDartCap) {
    if (m < 2 || n % m != 0)
        throw std::invalid_argument("kernel_size: target modulus must divide n");
    const ProjectiveMatrix id = psl2_identity(m);
    long long count = 0;
    for (const ProjectiveMatrix& g : enumerate_group(n, cap))
        if (reduce(g, m) == id) ++count;
    return count;
}

}  // namespace farey
