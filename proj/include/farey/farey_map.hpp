#pragma once

// The Farey map M3(n): vertices are classes [a/c] of pairs mod n with
// gcd(a, c, n) = 1 under simultaneous negation, and [a/c] ~ [b/d] exactly
// when ad - bc = +-1 (mod n). The underlying graph is n-valent.

#include "farey/graph.hpp"
#include "farey/modular.hpp"

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace farey {

// Class [a/c]_n; the stored pair is the lexicographically smaller of the
// two sign-related representatives.
struct FareyVertex {
    int n = 2;
    int a = 0;
    int c = 1;

    friend constexpr bool operator==(const FareyVertex&, const FareyVertex&) = default;
    friend constexpr auto operator<=>(const FareyVertex&, const FareyVertex&) = default;
};

inline FareyVertex make_farey_vertex(long long a, long long c, int n) {
    if (n < 2) throw std::invalid_argument("make_farey_vertex: modulus must be at least 2");
    int ra = mod_residue(a, n), rc = mod_residue(c, n);
    if (std::gcd(std::gcd(static_cast<long long>(ra), static_cast<long long>(rc)),
                 static_cast<long long>(n)) != 1)
        throw std::invalid_argument("make_farey_vertex: gcd(a, c, n) must be 1");
    int na = ra ? n - ra : 0, nc = rc ? n - rc : 0;
    if (na < ra || (na == ra && nc < rc)) return {n, na, nc};
    return {n, ra, rc};
}

inline std::string vertex_label(const FareyVertex& v) {
    return std::to_string(v.a) + "/" + std::to_string(v.c) + "@" + std::to_string(v.n);
}

// |V3(n)| = (n^2 / 2) prod_{p | n} (1 - 1/p^2) for n > 2, and 3 at n = 2.
inline long long vertex_count(long long n) {
    if (n < 2) throw std::invalid_argument("vertex_count: modulus must be at least 2");
    if (n == 2) return 3;
    long long count = n * n;
    for (const auto& [p, e] : prime_factorization(n))
        count = count / (p * p) * (p * p - 1);
    return count / 2;
}

namespace detail {

// Star-contiguous order for an odd prime p: block t = a - 1 lists the star
// of the pole [a/0] for a = 1..(p-1)/2. Within a block, the member [b/c]
// (c = +-a^{-1}) sits at slot b c^{-1} mod p and the pole closes the block
// at slot p. Then 2-walk counts vanish exactly between same-slot vertices,
// which is what tiles A^2 - pI into constant blocks.
inline std::vector<FareyVertex> prime_star_order(int p) {
    std::vector<FareyVertex> order;
    order.reserve(static_cast<std::size_t>(p) * (p + 1) / 2);
    for (int a = 1; 2 * a < p; ++a) {
        int ainv = modular_inverse(a, p);
        for (int k = 0; k < p; ++k)
            order.push_back(make_farey_vertex(static_cast<long long>(k) * ainv, ainv, p));
        order.push_back(make_farey_vertex(a, 0, p));
    }
    return order;
}

}  // namespace detail

// Odd primes come out in star order; everything else lexicographically.
inline std::vector<FareyVertex> enumerate_vertices(int n) {
    if (n < 2) throw std::invalid_argument("enumerate_vertices: modulus must be at least 2");
    if (n > 2 && is_prime(n)) return detail::prime_star_order(n);
    std::vector<FareyVertex> verts;
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            if (std::gcd(std::gcd(a, c), n) != 1) continue;
            int na = a ? n - a : 0, nc = c ? n - c : 0;
            if (std::pair{na, nc} < std::pair{a, c}) continue;  // keep canonical reps only
            verts.push_back({n, a, c});
        }
    return verts;
}

inline bool adjacent(const FareyVertex& u, const FareyVertex& v) {
    if (u.n != v.n) throw std::invalid_argument("adjacent: modulus mismatch");
    int delta = mod_residue(static_cast<long long>(u.a) * v.c - static_cast<long long>(v.a) * u.c, u.n);
    return delta == 1 || delta == u.n - 1;
}

// Poles [a/0], increasing a; canonical reps have 1 <= a <= n/2.
inline std::vector<FareyVertex> poles(int n) {
    if (n < 2) throw std::invalid_argument("poles: modulus must be at least 2");
    std::vector<FareyVertex> out;
    for (int a = 1; 2 * a <= n; ++a)
        if (std::gcd(a, n) == 1) out.push_back({n, a, 0});
    return out;
}

inline RegularGraph build_graph(int n, int cap = kGraphCap) {
    if (n < 2) throw std::invalid_argument("build_graph: modulus must be at least 2");
    if (n > cap) throw std::invalid_argument("build_graph: level exceeds the graph cap");
    std::vector<FareyVertex> verts = enumerate_vertices(n);
    const std::size_t count = verts.size();
    std::vector<std::string> labels;
    labels.reserve(count);
    for (const FareyVertex& v : verts) labels.push_back(vertex_label(v));
    std::vector<std::uint8_t> adj(count * count, 0);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            if (adjacent(verts[i], verts[j])) adj[i * count + j] = adj[j * count + i] = 1;
    return RegularGraph(std::move(labels), std::move(adj));
}

// Number of 2-walks from v0 = [1/0] to [b/d]: solutions x of
// xd = b+1 (mod n) and xd = b-1 (mod n) together, where each congruence
// contributes gcd(d, n) solutions when solvable. At n = 2 the two
// right-hand sides coincide and the merged congruence counts once.
inline long long walks2_count(int n, long long b, long long d) {
    FareyVertex v = make_farey_vertex(b, d, n);  // validates gcd(b, d, n) = 1
    long long r = std::gcd(static_cast<long long>(v.c), static_cast<long long>(n));
    auto solutions = [&](long long rhs) { return mod_residue(rhs, n) % r == 0 ? r : 0; };
    if (n == 2) return solutions(v.a + 1);
    return solutions(v.a + 1) + solutions(v.a - 1);
}

}  // namespace farey
