#pragma once

// Hecke map analogues M4(n) (levels odd) and M6(n) (levels coprime to 3):
// bipartite n-valent graphs on two copies of the Farey vertices, with the
// twisted adjacency ad - t bc = +-1 (mod n), t = 2 or 3. Forgetting the
// parity is a double graph covering of M3(n), so the spectrum is the
// symmetrized Farey spectrum.

#include "farey/closed_form.hpp"
#include "farey/farey_map.hpp"
#include "farey/graph.hpp"
#include "farey/spectrum.hpp"
#include "farey/verdict.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace farey {

enum class HeckeParity { even, odd };

struct HeckeVertex {
    int q = 4;  // family tag: 4 or 6
    int n = 3;
    HeckeParity parity = HeckeParity::even;
    int a = 0;  // canonical Farey pair
    int c = 1;

    friend constexpr bool operator==(const HeckeVertex&, const HeckeVertex&) = default;
};

inline void validate_hecke_family(int q, int n) {
    if (q != 4 && q != 6) throw std::invalid_argument("hecke: family tag must be 4 or 6");
    if (q == 4 && (n < 3 || n % 2 == 0))
        throw std::invalid_argument("hecke: q = 4 requires odd n >= 3");
    if (q == 6 && (n < 2 || n % 3 == 0))
        throw std::invalid_argument("hecke: q = 6 requires n >= 2 coprime to 3");
}

// Even vertices first, then odd, Farey enumeration order within each half.
inline std::vector<HeckeVertex> enumerate_hecke_vertices(int q, int n) {
    validate_hecke_family(q, n);
    std::vector<HeckeVertex> verts;
    const std::vector<FareyVertex> base = enumerate_vertices(n);
    verts.reserve(2 * base.size());
    for (const FareyVertex& v : base) verts.push_back({q, n, HeckeParity::even, v.a, v.c});
    for (const FareyVertex& v : base) verts.push_back({q, n, HeckeParity::odd, v.a, v.c});
    return verts;
}

// Edges join opposite parities only: even [a/c], odd [b/d] are adjacent
// iff ad - t bc = +-1 (mod n).
inline bool hecke_adjacent(const HeckeVertex& u, const HeckeVertex& v) {
    if (u.q != v.q || u.n != v.n) throw std::invalid_argument("hecke_adjacent: family mismatch");
    if (u.parity == v.parity) return false;
    const HeckeVertex& even = u.parity == HeckeParity::even ? u : v;
    const HeckeVertex& odd = u.parity == HeckeParity::even ? v : u;
    const long long t = u.q == 4 ? 2 : 3;
    int delta = mod_residue(static_cast<long long>(even.a) * odd.c - t * odd.a * even.c, u.n);
    return delta == 1 || delta == u.n - 1;
}

// "a/c√2@n" for even vertices, "a√2/c@n" for odd (√3 in the q = 6 family),
// with a unit coefficient before the radical suppressed.
inline std::string hecke_label(const HeckeVertex& v) {
    const std::string root = v.q == 4 ? "√2" : "√3";
    auto with_root = [&](int x) { return x == 1 ? root : std::to_string(x) + root; };
    std::string body = v.parity == HeckeParity::even
                           ? std::to_string(v.a) + "/" + with_root(v.c)
                           : with_root(v.a) + "/" + std::to_string(v.c);
    return body + "@" + std::to_string(v.n);
}

inline RegularGraph build_hecke_graph(int q, int n, int cap = kGraphCap) {
    validate_hecke_family(q, n);
    if (n > cap) throw std::invalid_argument("build_hecke_graph: level exceeds the graph cap");
    const std::vector<HeckeVertex> verts = enumerate_hecke_vertices(q, n);
    const std::size_t count = verts.size();
    std::vector<std::string> labels;
    labels.reserve(count);
    for (const HeckeVertex& v : verts) labels.push_back(hecke_label(v));
    std::vector<std::uint8_t> adj(count * count, 0);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            if (hecke_adjacent(verts[i], verts[j])) adj[i * count + j] = adj[j * count + i] = 1;
    return RegularGraph(std::move(labels), std::move(adj));
}

// Covering map onto M3(n): an even vertex drops its radical, [a/c√t] to
// [a/c], while an odd vertex [b√t/d] lands on [tb/d]. The twist turns the
// relation ad - t bc = +-1 into the plain Farey one, so edges map to edges.
inline std::vector<int> hecke_projection(int q, int n) {
    validate_hecke_family(q, n);
    const long long t = q == 4 ? 2 : 3;
    const std::vector<FareyVertex> base = enumerate_vertices(n);
    std::map<std::pair<int, int>, int> index;
    for (std::size_t i = 0; i < base.size(); ++i)
        index[{base[i].a, base[i].c}] = static_cast<int>(i);
    const std::vector<HeckeVertex> verts = enumerate_hecke_vertices(q, n);
    std::vector<int> out(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const HeckeVertex& v = verts[i];
        long long a = v.parity == HeckeParity::even ? v.a : t * v.a;
        FareyVertex target = make_farey_vertex(a, v.c, n);
        out[i] = index.at({target.a, target.c});
    }
    return out;
}

// The projection must be a double graph covering: neighbourhoods map
// bijectively onto base neighbourhoods.
inline Verdict verify_hecke_covering(int q, int n, int cap = kGraphCap) {
    RegularGraph hk = build_hecke_graph(q, n, cap);
    RegularGraph base = build_graph(n, cap);
    const std::vector<int> proj = hecke_projection(q, n);

    std::vector<int> hits(base.vertex_count());
    for (int v = 0; v < hk.vertex_count(); ++v) {
        std::fill(hits.begin(), hits.end(), 0);
        for (int w = 0; w < hk.vertex_count(); ++w)
            if (hk.adjacent(v, w)) ++hits[proj[w]];
        for (int b = 0; b < base.vertex_count(); ++b) {
            int expected = base.adjacent(proj[v], b) ? 1 : 0;
            if (hits[b] != expected)
                return Verdict::fail("neighbourhood of " + hk.label(v) + " hits " + base.label(b) + " " +
                                     std::to_string(hits[b]) + " times, expected " +
                                     std::to_string(expected));
        }
    }
    return Verdict::ok("2 sheets over M3(" + std::to_string(n) + ")");
}

// Bipartite double cover spectrum: -sp3(n) together with sp3(n).
inline Spectrum hecke_spectrum(int q, int n) {
    validate_hecke_family(q, n);
    Spectrum base = closed_form_spectrum(n);
    return spectrum_union(spectrum_scale(-1, base), base);
}

inline int hecke_diameter(int q, int n, int cap = kGraphCap) {
    return diameter(build_hecke_graph(q, n, cap));
}

// Ramanujan bound at prime levels, by exact comparison of the
// second-largest modulus against 2 sqrt(p - 1).
inline bool hecke_ramanujan(int q, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("hecke_ramanujan: level must be prime");
    validate_hecke_family(q, static_cast<int>(p));
    Surd lam = hecke_spectrum(q, static_cast<int>(p)).second_largest_modulus();
    return lam.z * lam.z * lam.s < 4 * (p - 1);
}

}  // namespace farey
