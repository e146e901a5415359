#include <farey/hecke.hpp>
#include <farey/jacobi.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace farey;

TEST_CASE("family validation") {
    CHECK_NOTHROW(validate_hecke_family(4, 3));
    CHECK_NOTHROW(validate_hecke_family(4, 15));
    CHECK_NOTHROW(validate_hecke_family(6, 2));
    CHECK_NOTHROW(validate_hecke_family(6, 10));
    CHECK_THROWS_AS(validate_hecke_family(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(validate_hecke_family(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(validate_hecke_family(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(validate_hecke_family(6, 9), std::invalid_argument);
    CHECK_THROWS_AS(validate_hecke_family(6, 1), std::invalid_argument);
}

TEST_CASE("vertex sets are two Farey copies") {
    auto verts = enumerate_hecke_vertices(4, 5);
    REQUIRE(verts.size() == 24);
    CHECK(verts[0].parity == HeckeParity::even);
    CHECK(verts[12].parity == HeckeParity::odd);
    // same underlying pair repeats at offset |V3(n)|
    for (std::size_t i = 0; i < 12; ++i) {
        CHECK(verts[i].a == verts[i + 12].a);
        CHECK(verts[i].c == verts[i + 12].c);
    }
}

TEST_CASE("labels carry the radical on the parity side") {
    HeckeVertex even{4, 5, HeckeParity::even, 2, 1};
    CHECK(hecke_label(even) == "2/√2@5");
    HeckeVertex odd{4, 5, HeckeParity::odd, 2, 1};
    CHECK(hecke_label(odd) == "2√2/1@5");
    HeckeVertex e6{6, 5, HeckeParity::even, 0, 1};
    CHECK(hecke_label(e6) == "0/√3@5");
    HeckeVertex o3{6, 7, HeckeParity::odd, 1, 3};
    CHECK(hecke_label(o3) == "√3/3@7");
}

TEST_CASE("adjacency is bipartite and twisted") {
    // the cube: M4(3) is 3-regular bipartite on 8 vertices
    RegularGraph cube = build_hecke_graph(4, 3);
    CHECK(cube.vertex_count() == 8);
    CHECK(cube.degree() == 3);
    CHECK(is_connected(cube));
    CHECK(diameter(cube) == 3);

    auto verts = enumerate_hecke_vertices(4, 3);
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = 0; j < verts.size(); ++j)
            if (verts[i].parity == verts[j].parity)
                CHECK_FALSE(hecke_adjacent(verts[i], verts[j]));
}

TEST_CASE("graphs are n-regular bipartite doubles") {
    for (auto [q, n] : std::vector<std::pair<int, int>>{{4, 3}, {4, 5}, {4, 9}, {6, 2},
                                                        {6, 4}, {6, 5}, {6, 8}}) {
        INFO("q=" << q << " n=" << n);
        RegularGraph g = build_hecke_graph(q, n);
        CHECK(g.vertex_count() == 2 * vertex_count(n));
        CHECK(g.degree() == n);
        CHECK(is_connected(g));
    }
}

TEST_CASE("projection is a double covering of the Farey map") {
    for (auto [q, n] : std::vector<std::pair<int, int>>{{4, 3}, {4, 5}, {4, 7}, {4, 9}, {4, 11},
                                                        {4, 13}, {4, 15}, {6, 2}, {6, 4}, {6, 5},
                                                        {6, 7}, {6, 8}, {6, 10}}) {
        INFO("q=" << q << " n=" << n);
        CHECK(verify_hecke_covering(q, n).pass);
    }
}

TEST_CASE("spectrum is the symmetrized Farey spectrum") {
    // M4(5): {-5, -sqrt(5)^6, -1^5, 1^5, sqrt(5)^6, 5}
    Spectrum sp = hecke_spectrum(4, 5);
    CHECK(sp.total_multiplicity() == 24);
    CHECK(sp.multiplicity_of({-5, 1}) == 1);
    CHECK(sp.multiplicity_of({-1, 5}) == 6);
    CHECK(sp.multiplicity_of({-1, 1}) == 5);
    CHECK(sp.multiplicity_of({1, 1}) == 5);
    CHECK(sp.multiplicity_of({1, 5}) == 6);
    CHECK(sp.multiplicity_of({5, 1}) == 1);

    for (auto [q, n] : std::vector<std::pair<int, int>>{{4, 3}, {4, 5}, {4, 7}, {4, 9},
                                                        {6, 2}, {6, 4}, {6, 5}, {6, 7}}) {
        INFO("q=" << q << " n=" << n);
        NumericSpectrum num = numeric_spectrum(build_hecke_graph(q, n));
        CHECK(compare_spectra(hecke_spectrum(q, n), num).pass);
    }
}

TEST_CASE("diameters settle at four") {
    CHECK(hecke_diameter(4, 3) == 3);
    CHECK(hecke_diameter(6, 2) == 3);
    CHECK(hecke_diameter(6, 4) == 3);
    for (auto [q, n] : std::vector<std::pair<int, int>>{{4, 5}, {4, 7}, {4, 9}, {4, 11}, {4, 13},
                                                        {4, 15}, {6, 5}, {6, 7}, {6, 8}, {6, 10},
                                                        {6, 11}, {6, 13}}) {
        INFO("q=" << q << " n=" << n);
        CHECK(hecke_diameter(q, n) == 4);
    }
}

TEST_CASE("Ramanujan bound at prime levels") {
    for (long long p : {5, 7, 11, 13, 17, 19, 23, 29}) CHECK(hecke_ramanujan(4, p));
    for (long long p : {2, 5, 7, 11, 13, 17, 19, 23, 29}) CHECK(hecke_ramanujan(6, p));
    CHECK_THROWS_AS(hecke_ramanujan(4, 9), std::invalid_argument);
    CHECK_THROWS_AS(hecke_ramanujan(4, 15), std::invalid_argument);
}
