#pragma once

// Graph coverings between Farey maps: entrywise reduction to a divisor
// level, the complete-graph projection at odd primes, tensor and parallel
// products, and the unramified double cover of a product by the map at the
// product level.

#include "farey/farey_map.hpp"
#include "farey/graph.hpp"
#include "farey/modular.hpp"
#include "farey/psl2.hpp"
#include "farey/verdict.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace farey {

// [a/c]_n -> [a/c]_m for m | n. Well-defined: any common divisor of
// a, c, m would divide gcd(a, c, n).
inline FareyVertex reduce_vertex(const FareyVertex& v, int m) {
    if (m < 2 || v.n % m != 0)
        throw std::invalid_argument("reduce_vertex: target modulus must divide n");
    return make_farey_vertex(v.a, v.c, m);
}

// Position of each level-n vertex's reduction within enumerate_vertices(m).
inline std::vector<int> reduction_vertex_map(int n, int m) {
    if (m < 2 || n % m != 0)
        throw std::invalid_argument("reduction_vertex_map: target modulus must divide n");
    std::map<FareyVertex, int> index;
    {
        int i = 0;
        for (const FareyVertex& w : enumerate_vertices(m)) index[w] = i++;
    }
    std::vector<int> out;
    for (const FareyVertex& v : enumerate_vertices(n)) out.push_back(index.at(reduce_vertex(v, m)));
    return out;
}

// Check that reduction M3(n) -> M3(m) is a covering of constant valency
// d = n/m: fibers partition the vertices evenly, and across every base
// edge each fiber member has exactly d neighbours in the partner fiber.
inline Verdict verify_map_covering(int n, int m, int cap = kGraphCap) {
    if (m < 2 || n % m != 0)
        throw std::invalid_argument("verify_map_covering: target modulus must divide n");
    const int d = n / m;
    RegularGraph gn = build_graph(n, cap);
    RegularGraph gm = build_graph(m, cap);
    std::vector<int> to_base = reduction_vertex_map(n, m);

    std::vector<std::vector<int>> fibers(gm.vertex_count());
    for (int i = 0; i < gn.vertex_count(); ++i) fibers[to_base[i]].push_back(i);
    const long long fiber_size = vertex_count(n) / vertex_count(m);
    for (int b = 0; b < gm.vertex_count(); ++b)
        if (static_cast<long long>(fibers[b].size()) != fiber_size)
            return Verdict::fail("fiber over " + gm.label(b) + " has size " +
                                 std::to_string(fibers[b].size()) + ", expected " +
                                 std::to_string(fiber_size));

    for (int b1 = 0; b1 < gm.vertex_count(); ++b1)
        for (int b2 = b1 + 1; b2 < gm.vertex_count(); ++b2) {
            if (!gm.adjacent(b1, b2)) continue;
            for (int side = 0; side < 2; ++side) {
                const auto& from = side == 0 ? fibers[b1] : fibers[b2];
                const auto& to = side == 0 ? fibers[b2] : fibers[b1];
                for (int w : from) {
                    int links = 0;
                    for (int u : to) links += gn.adjacent(w, u) ? 1 : 0;
                    if (links != d)
                        return Verdict::fail("vertex " + gn.label(w) + " has " + std::to_string(links) +
                                             " neighbours over base edge " + gm.label(b1) + " ~ " +
                                             gm.label(b2) + ", expected " + std::to_string(d));
                }
            }
        }
    return Verdict::ok("d = " + std::to_string(d) + ", " + std::to_string(fibers.size()) + " fibers of size " +
                       std::to_string(fiber_size));
}

// Projection of M3(p) onto the complete graph K_{p+1} at an odd prime:
// poles map to the extra vertex p, and [a/b] maps to a b^{-1} mod p.
inline std::vector<int> complete_graph_projection(int p) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("complete_graph_projection: level must be an odd prime");
    std::vector<int> phi;
    for (const FareyVertex& v : enumerate_vertices(p))
        phi.push_back(v.c == 0 ? p : mod_residue(static_cast<long long>(v.a) * modular_inverse(v.c, p), p));
    return phi;
}

// The projection is a (p-1)/2-sheeted covering: fibers have equal size and
// every closed neighbourhood maps bijectively onto the p + 1 spots of K_{p+1}.
inline Verdict verify_complete_graph_covering(int p, int cap = kGraphCap) {
    RegularGraph g = build_graph(p, cap);
    std::vector<int> phi = complete_graph_projection(p);

    std::vector<int> fiber_sizes(p + 1, 0);
    for (int spot : phi) ++fiber_sizes[spot];
    for (int spot = 0; spot <= p; ++spot)
        if (fiber_sizes[spot] != (p - 1) / 2)
            return Verdict::fail("fiber over spot " + std::to_string(spot) + " has size " +
                                 std::to_string(fiber_sizes[spot]) + ", expected " +
                                 std::to_string((p - 1) / 2));

    std::vector<int> hits(p + 1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::fill(hits.begin(), hits.end(), 0);
        ++hits[phi[v]];
        for (int w = 0; w < g.vertex_count(); ++w)
            if (g.adjacent(v, w)) ++hits[phi[w]];
        for (int spot = 0; spot <= p; ++spot)
            if (hits[spot] != 1)
                return Verdict::fail("closed neighbourhood of " + g.label(v) + " hits spot " +
                                     std::to_string(spot) + " " + std::to_string(hits[spot]) + " times");
    }
    return Verdict::ok(std::to_string((p - 1) / 2) + " sheets onto K_" + std::to_string(p + 1));
}

// Tensor (categorical) product: (u1, u2) ~ (v1, v2) iff u1 ~ v1 and u2 ~ v2.
inline RegularGraph tensor_product(const RegularGraph& g1, const RegularGraph& g2) {
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    const std::size_t count = static_cast<std::size_t>(n1) * n2;
    std::vector<std::string> labels;
    labels.reserve(count);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) labels.push_back("(" + g1.label(i) + "," + g2.label(j) + ")");
    std::vector<std::uint8_t> adj(count * count, 0);
    for (int i1 = 0; i1 < n1; ++i1)
        for (int j1 = 0; j1 < n2; ++j1)
            for (int i2 = 0; i2 < n1; ++i2)
                for (int j2 = 0; j2 < n2; ++j2) {
                    if (!g1.adjacent(i1, i2) || !g2.adjacent(j1, j2)) continue;
                    std::size_t u = static_cast<std::size_t>(i1) * n2 + j1;
                    std::size_t v = static_cast<std::size_t>(i2) * n2 + j2;
                    adj[u * count + v] = 1;
                }
    return RegularGraph(std::move(labels), std::move(adj));
}

// Darts of the parallel product of M3(n1) and M3(n2): the closure of the
// paired generators (X, X), (Y, Y) inside PSL2(n1) x PSL2(n2). The closure
// lives at the lcm level, which must stay within the dart cap.
inline std::vector<std::pair<ProjectiveMatrix, ProjectiveMatrix>>
parallel_product_darts(int n1, int n2, int cap = kDartCap) {
    if (n1 < 2 || n2 < 2)
        throw std::invalid_argument("parallel_product_darts: moduli must be at least 2");
    if (std::lcm(static_cast<long long>(n1), static_cast<long long>(n2)) > cap)
        throw std::invalid_argument("parallel_product_darts: lcm exceeds the enumeration cap");
    using Pair = std::pair<ProjectiveMatrix, ProjectiveMatrix>;
    const std::uint64_t stride = static_cast<std::uint64_t>(n2) * n2 * n2 * n2;
    auto pack = [&](const Pair& g) {
        return detail::pack_matrix(g.first) * stride + detail::pack_matrix(g.second);
    };
    const std::array<Pair, 2> gens{Pair{generator_x(n1), generator_x(n2)},
                                   Pair{generator_y(n1), generator_y(n2)}};
    std::vector<Pair> elements{{psl2_identity(n1), psl2_identity(n2)}};
    std::unordered_set<std::uint64_t> seen{pack(elements[0])};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        Pair g = elements[head];
        for (const Pair& s : gens) {
            Pair next{multiply(g.first, s.first), multiply(g.second, s.second)};
            if (seen.insert(pack(next)).second) elements.push_back(next);
        }
    }
    std::sort(elements.begin(), elements.end());
    return elements;
}

// The unit u mod lm with u = 1 (mod l) and u = -1 (mod m), for coprime
// l, m >= 3. Pairing [a/c] with [ua/uc] realizes the double cover.
inline long long double_cover_unit(long long l, long long m) {
    if (l < 3 || m < 3) throw std::invalid_argument("double_cover_unit: levels must be at least 3");
    if (std::gcd(l, m) != 1) throw std::invalid_argument("double_cover_unit: levels must be coprime");
    long long t = mod_residue(-2 * modular_inverse(l % m, static_cast<int>(m)), static_cast<int>(m));
    return 1 + l * t;
}

namespace detail {

inline bool twice_odd(int x) { return x % 2 == 0 && (x / 2) % 2 == 1; }

}  // namespace detail

// Check that reduction realizes M3(lm) as an unramified double cover of the
// tensor product M3(l) x M3(m): every fiber is the pair {[a/c], [ua/uc]},
// and across tensor edges each fiber member has exactly one neighbour in
// the partner fiber.
inline Verdict verify_double_cover(int l, int m, int cap = kGraphCap) {
    if (l < 3 || m < 3)
        throw std::invalid_argument("verify_double_cover: levels must be at least 3");
    if (std::gcd(l, m) != 1)
        throw std::invalid_argument("verify_double_cover: levels must be coprime");
    if (detail::twice_odd(l) || detail::twice_odd(m))
        throw std::invalid_argument("verify_double_cover: levels twice an odd number are ramified");
    const int lm = l * m;
    RegularGraph g = build_graph(lm, cap);
    RegularGraph gl = build_graph(l, cap);
    RegularGraph gm = build_graph(m, cap);
    const std::vector<FareyVertex> verts = enumerate_vertices(lm);
    const std::vector<int> to_l = reduction_vertex_map(lm, l);
    const std::vector<int> to_m = reduction_vertex_map(lm, m);

    const int pairs = gl.vertex_count() * gm.vertex_count();
    auto pair_index = [&](int i) { return to_l[i] * gm.vertex_count() + to_m[i]; };
    std::vector<std::vector<int>> fibers(pairs);
    for (int i = 0; i < g.vertex_count(); ++i) fibers[pair_index(i)].push_back(i);
    for (int pi = 0; pi < pairs; ++pi)
        if (fibers[pi].size() != 2)
            return Verdict::fail("fiber over tensor vertex (" + gl.label(pi / gm.vertex_count()) + "," +
                                 gm.label(pi % gm.vertex_count()) + ") has size " +
                                 std::to_string(fibers[pi].size()) + ", expected 2");

    const long long u = double_cover_unit(l, m);
    std::map<FareyVertex, int> index;
    for (int i = 0; i < g.vertex_count(); ++i) index[verts[i]] = i;
    for (int i = 0; i < g.vertex_count(); ++i) {
        FareyVertex partner = make_farey_vertex(u * verts[i].a, u * verts[i].c, lm);
        int j = index.at(partner);
        if (j == i || pair_index(j) != pair_index(i))
            return Verdict::fail("u-pairing failed at " + vertex_label(verts[i]));
    }

    for (int p1 = 0; p1 < pairs; ++p1)
        for (int p2 = 0; p2 < pairs; ++p2) {
            if (!gl.adjacent(p1 / gm.vertex_count(), p2 / gm.vertex_count())) continue;
            if (!gm.adjacent(p1 % gm.vertex_count(), p2 % gm.vertex_count())) continue;
            for (int w : fibers[p1]) {
                int links = (g.adjacent(w, fibers[p2][0]) ? 1 : 0) + (g.adjacent(w, fibers[p2][1]) ? 1 : 0);
                if (links != 1)
                    return Verdict::fail("vertex " + g.label(w) + " has " + std::to_string(links) +
                                         " neighbours in a partner fiber, expected 1");
            }
        }
    return Verdict::ok("u = " + std::to_string(u) + ", 2-to-1 onto " + std::to_string(pairs) +
                       " tensor vertices");
}

}  // namespace farey
