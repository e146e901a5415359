#include <farey/farey_map.hpp>
#include <farey/jacobi.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace farey;

TEST_CASE("diagonal matrices come back sorted") {
    std::vector<double> a{3, 0, 0, 0, -1, 0, 0, 0, 2};
    auto eig = symmetric_eigenvalues(a, 3);
    REQUIRE(eig.size() == 3);
    CHECK(eig[0] == -1.0);
    CHECK(eig[1] == 2.0);
    CHECK(eig[2] == 3.0);
}

TEST_CASE("2x2 rotation") {
    // [[2,1],[1,2]] has eigenvalues 1 and 3
    auto eig = symmetric_eigenvalues({2, 1, 1, 2}, 2);
    CHECK_THAT(eig[0], Catch::Matchers::WithinAbs(1.0, 1e-12));
    CHECK_THAT(eig[1], Catch::Matchers::WithinAbs(3.0, 1e-12));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(symmetric_eigenvalues({1, 2, 3}, 2), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_eigenvalues({0, 1, 2, 0}, 2), std::invalid_argument);
}

TEST_CASE("random symmetric matrices: eigenvalues satisfy trace identities") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int t = 0; t < 20; ++t) {
        const int n = 8;
        std::vector<double> a(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) a[i * n + j] = a[j * n + i] = dist(rng);
        double trace = 0, frob = 0;
        for (int i = 0; i < n; ++i) {
            trace += a[i * n + i];
            for (int j = 0; j < n; ++j) frob += a[i * n + j] * a[i * n + j];
        }
        auto eig = symmetric_eigenvalues(a, n);
        double sum = 0, sumsq = 0;
        for (double v : eig) { sum += v; sumsq += v * v; }
        CHECK_THAT(sum, Catch::Matchers::WithinAbs(trace, 1e-8));
        CHECK_THAT(sumsq, Catch::Matchers::WithinAbs(frob, 1e-8));
        for (std::size_t i = 1; i < eig.size(); ++i) CHECK(eig[i - 1] <= eig[i]);
    }
}

TEST_CASE("clustering merges near-degenerate values") {
    NumericSpectrum sp = cluster_eigenvalues({-2.0, -2.0 + 1e-9, 0.5, 0.5 + 2e-7, 3.0});
    REQUIRE(sp.entries.size() == 3);
    CHECK(sp.entries[0].multiplicity == 2);
    CHECK_THAT(sp.entries[0].value, Catch::Matchers::WithinAbs(-2.0, 1e-8));
    CHECK(sp.entries[1].multiplicity == 2);
    CHECK(sp.entries[2].multiplicity == 1);
    CHECK(sp.total_multiplicity() == 5);
}

TEST_CASE("numeric spectrum of the triangle") {
    // M3(2) = K3: eigenvalues 2, -1, -1
    NumericSpectrum sp = numeric_spectrum(build_graph(2));
    REQUIRE(sp.entries.size() == 2);
    CHECK(sp.entries[0].multiplicity == 2);
    CHECK_THAT(sp.entries[0].value, Catch::Matchers::WithinAbs(-1.0, 1e-10));
    CHECK(sp.entries[1].multiplicity == 1);
    CHECK_THAT(sp.entries[1].value, Catch::Matchers::WithinAbs(2.0, 1e-10));
}

TEST_CASE("compare_spectra verdicts") {
    Spectrum exact;
    exact.add({-1, 1}, 2);
    exact.add({2, 1}, 1);

    NumericSpectrum good{{{-1.0 + 1e-10, 2}, {2.0, 1}}};
    CHECK(compare_spectra(exact, good).pass);

    NumericSpectrum wrong_mult{{{-1.0, 1}, {2.0, 2}}};
    auto v1 = compare_spectra(exact, wrong_mult);
    CHECK_FALSE(v1.pass);
    CHECK(v1.detail.find("multiplicity mismatch") != std::string::npos);

    NumericSpectrum wrong_value{{{-1.0, 2}, {2.5, 1}}};
    auto v2 = compare_spectra(exact, wrong_value, 1e-8);
    CHECK_FALSE(v2.pass);
    CHECK(v2.detail.find("value mismatch") != std::string::npos);

    NumericSpectrum wrong_count{{{2.0, 3}}};
    CHECK_FALSE(compare_spectra(exact, wrong_count).pass);
}

TEST_CASE("Farey maps with tight clusters converge") {
    // n = 23, 25, 29 stall without the thresholding schedule
    for (int n : {23, 25, 29}) {
        NumericSpectrum sp = numeric_spectrum(build_graph(n));
        CHECK(sp.total_multiplicity() == vertex_count(n));
        CHECK_THAT(sp.entries.back().value,
                   Catch::Matchers::WithinAbs(static_cast<double>(n), 1e-8));
    }
}
