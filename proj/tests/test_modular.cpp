#include <farey/modular.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

using namespace farey;

TEST_CASE("mod_residue maps into [0, n)") {
    CHECK(mod_residue(7, 5) == 2);
    CHECK(mod_residue(-1, 5) == 4);
    CHECK(mod_residue(-10, 5) == 0);
    CHECK(mod_residue(0, 7) == 0);
    CHECK(mod_residue(-13, 7) == 1);
}

TEST_CASE("modular_inverse agrees with brute force") {
    for (long long n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 21, 25, 30}) {
        for (long long a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            long long inv = modular_inverse(a, n);
            INFO("a=" << a << " n=" << n);
            CHECK(mod_residue(a * inv, n) == 1);
        }
    }
}

TEST_CASE("modular_inverse rejects non-units") {
    CHECK_THROWS_AS(modular_inverse(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(modular_inverse(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(modular_inverse(6, 9), std::invalid_argument);
}

TEST_CASE("is_prime on small range") {
    std::vector<long long> primes;
    for (long long n = 2; n <= 60; ++n)
        if (is_prime(n)) primes.push_back(n);
    CHECK(primes == std::vector<long long>{2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                           31, 37, 41, 43, 47, 53, 59});
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
}

TEST_CASE("prime_factorization reassembles the input") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<long long> dist(2, 100000);
    for (int t = 0; t < 200; ++t) {
        long long n = dist(rng);
        auto f = prime_factorization(n);
        long long prod = 1;
        long long last = 1;
        for (auto [p, k] : f) {
            CHECK(is_prime(p));
            CHECK(p > last);
            last = p;
            prod *= power(p, k);
        }
        CHECK(prod == n);
    }
}

TEST_CASE("prime_factorization exact cases") {
    using F = std::vector<std::pair<long long, int>>;
    CHECK(prime_factorization(60) == F{{2, 2}, {3, 1}, {5, 1}});
    CHECK(prime_factorization(49) == F{{7, 2}});
    CHECK(prime_factorization(97) == F{{97, 1}});
}

TEST_CASE("power computes small exponents") {
    CHECK(power(2, 10) == 1024);
    CHECK(power(3, 4) == 81);
    CHECK(power(5, 0) == 1);
    CHECK(power(7, 1) == 7);
}
