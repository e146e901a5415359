#include <farey/closed_form.hpp>
#include <farey/coverings.hpp>
#include <farey/jacobi.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

using namespace farey;

TEST_CASE("reduce_vertex is the entrywise projection") {
    CHECK(reduce_vertex(make_farey_vertex(7, 3, 10), 5) == make_farey_vertex(2, 3, 5));
    CHECK(reduce_vertex(make_farey_vertex(5, 4, 12), 4) == make_farey_vertex(1, 0, 4));
    CHECK_THROWS_AS(reduce_vertex(make_farey_vertex(1, 0, 10), 4), std::invalid_argument);
}

TEST_CASE("reduction is a covering for every divisor pair up to 24") {
    for (int n = 4; n <= 24; ++n)
        for (int m = 2; m < n; ++m) {
            if (n % m != 0) continue;
            INFO("M3(" << n << ") -> M3(" << m << ")");
            CHECK(verify_map_covering(n, m).pass);
        }
}

TEST_CASE("tower fiber sizes") {
    // vertex fibers of a tower step carry p^2 vertices each, except the
    // bottom (4,2) step where the mod-2 collapse halves it
    CHECK(vertex_count(4) / vertex_count(2) == 2);
    CHECK(vertex_count(8) / vertex_count(4) == 4);
    CHECK(vertex_count(9) / vertex_count(3) == 9);
    CHECK(vertex_count(25) / vertex_count(5) == 25);
    CHECK(vertex_count(27) / vertex_count(9) == 9);
    CHECK(vertex_count(16) / vertex_count(8) == 4);
}

TEST_CASE("complete graph projection at odd primes") {
    for (int p : {3, 5, 7, 11, 13}) {
        INFO("p=" << p);
        CHECK(verify_complete_graph_covering(p).pass);
    }
    CHECK_THROWS_AS(complete_graph_projection(4), std::invalid_argument);
    CHECK_THROWS_AS(complete_graph_projection(2), std::invalid_argument);
}

TEST_CASE("tensor product structure") {
    RegularGraph t = tensor_product(build_graph(2), build_graph(3));
    CHECK(t.vertex_count() == 12);
    CHECK(t.degree() == 6);
    // spectrum of a tensor product is the pointwise product of spectra
    NumericSpectrum num = numeric_spectrum(t);
    Spectrum expected = spectrum_product(closed_form_spectrum(2), closed_form_spectrum(3));
    CHECK(compare_spectra(expected, num).pass);
}

TEST_CASE("parallel product dart counts") {
    // with a factor of 2 the closure is all of the lcm-level dart group;
    // otherwise the unit u = 1 (mod l), -1 (mod m) cuts it to index 2, the
    // same index the double cover climbs back up
    CHECK(parallel_product_darts(2, 3).size() == psl2_order(6));
    CHECK(parallel_product_darts(2, 5).size() == psl2_order(10));
    CHECK(parallel_product_darts(3, 5).size() == psl2_order(15) / 2);
    CHECK(parallel_product_darts(4, 5).size() == psl2_order(20) / 2);
    CHECK(parallel_product_darts(4, 6).size() == psl2_order(12) / 2);
    CHECK_THROWS_AS(parallel_product_darts(7, 9), std::invalid_argument);
}

TEST_CASE("double cover unit") {
    long long u = double_cover_unit(3, 5);
    CHECK(mod_residue(u, 3) == 1);
    CHECK(mod_residue(u, 5) == 4);
    u = double_cover_unit(4, 9);
    CHECK(mod_residue(u, 4) == 1);
    CHECK(mod_residue(u, 9) == 8);
    CHECK_THROWS_AS(double_cover_unit(4, 6), std::invalid_argument);
}

TEST_CASE("product level doubly covers the tensor product") {
    for (auto [l, m] : std::vector<std::pair<int, int>>{{3, 4}, {3, 5}, {4, 5}, {5, 4}, {3, 7},
                                                        {4, 9}, {3, 8}, {5, 8}, {7, 8}}) {
        INFO("l=" << l << " m=" << m);
        CHECK(verify_double_cover(l, m).pass);
    }
    // levels twice an odd number are ramified and rejected up front
    CHECK_THROWS_AS(verify_double_cover(6, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify_double_cover(3, 10), std::invalid_argument);
}
