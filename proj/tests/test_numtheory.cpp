#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "ordclass/numtheory.hpp"

using namespace ordclass;

TEST_CASE("euler_phi")
{
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(9) == 6);
    CHECK(oracle::phi(12) == 4);
    CHECK(euler_phi(12) == 4);
    CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);

    for (u64 n = 1; n <= 500; ++n)
        REQUIRE(euler_phi(n) == oracle::phi(n));
}

TEST_CASE("euler_phi is multiplicative on coprime arguments")
{
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<u64> dist(1, 10000);
    int checked = 0;
    while (checked < 2000) {
        const u64 a = dist(rng), b = dist(rng);
        if (gcd(a, b) != 1)
            continue;
        REQUIRE(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
        ++checked;
    }
}

TEST_CASE("sum of phi over divisors is n")
{
    for (u64 n = 1; n <= 10000; ++n) {
        u64 sum = 0;
        for (u64 d : divisors(n))
            sum += euler_phi(d);
        REQUIRE(sum == n);
    }
}

TEST_CASE("divisors")
{
    CHECK(divisors(1) == std::vector<u64>{1});
    CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
    CHECK(oracle::divisors(24) == std::vector<u64>{1, 2, 3, 4, 6, 8, 12, 24});
    CHECK(divisors(24) == std::vector<u64>{1, 2, 3, 4, 6, 8, 12, 24});
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);
    for (u64 n = 1; n <= 2000; ++n)
        REQUIRE(divisors(n) == oracle::divisors(n));
}

TEST_CASE("factorize")
{
    CHECK(factorize(1).empty());
    CHECK(factorize(24) == Factorization{{2, 3}, {3, 1}});
    CHECK(factorize(1944) == Factorization{{2, 3}, {3, 5}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);

    SUBCASE("matches naive trial division")
    {
        for (u64 n = 1; n <= 5000; ++n) {
            const auto f = factorize(n);
            const auto naive = oracle::factorize(n);
            REQUIRE(f.size() == naive.size());
            for (std::size_t i = 0; i < f.size(); ++i) {
                REQUIRE(f[i].prime == naive[i].first);
                REQUIRE(f[i].exponent == naive[i].second);
            }
        }
    }

    SUBCASE("canonical form on random inputs")
    {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<u64> dist(1, 1'000'000'000);
        for (int t = 0; t < 300; ++t) {
            const u64 n = dist(rng);
            const auto f = factorize(n);
            REQUIRE(reconstruct(f) == n);
            for (std::size_t i = 0; i < f.size(); ++i) {
                REQUIRE(is_prime(f[i].prime));
                REQUIRE(f[i].exponent >= 1);
                if (i > 0)
                    REQUIRE(f[i - 1].prime < f[i].prime);
            }
        }
    }
}

TEST_CASE("is_prime")
{
    for (u64 n = 0; n <= 20000; ++n)
        REQUIRE(is_prime(n) == oracle::is_prime(n));
    CHECK(is_prime(2305843009213693951ULL));    // 2^61 - 1
    CHECK_FALSE(is_prime(3215031751ULL));       // strong pseudoprime to bases 2, 3, 5, 7
    CHECK_FALSE(is_prime(3825123056546413051ULL));
    CHECK(is_prime(18446744073709551557ULL));   // largest 64-bit prime
}

TEST_CASE("checked arithmetic refuses to wrap")
{
    CHECK_THROWS_AS(checked_mul(1ULL << 40, 1ULL << 40), std::overflow_error);
    CHECK_THROWS_AS(checked_add(~0ULL, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_pow(3, 41), std::overflow_error);
    CHECK(checked_pow(3, 40) == 12157665459056928801ULL);
    CHECK_THROWS_AS(lcm(1ULL << 63, 3), std::overflow_error);
}

TEST_CASE("integer partitions")
{
    const auto expected = oracle::partition_numbers(15);
    CHECK(expected[6] == 11);
    for (unsigned n = 0; n <= 15; ++n)
        REQUIRE(integer_partitions(n).size() == expected[n]);
    CHECK(integer_partitions(3) == std::vector<std::vector<unsigned>>{{3}, {2, 1}, {1, 1, 1}});
}

TEST_CASE("consecutive prime powers")
{
    using C = PrimePowerCase;
    SUBCASE("limit 10")
    {
        const std::vector<PrimePowerSolution> expected = {
            {3, 1, 2, 1, C::Fermat},   {2, 2, 3, 1, C::Mersenne}, {5, 1, 2, 2, C::Fermat},
            {2, 3, 7, 1, C::Mersenne}, {3, 2, 2, 3, C::Catalan},
        };
        CHECK(solve_consecutive_prime_powers(10) == expected);
    }

    CHECK(solve_consecutive_prime_powers(2).empty());
    CHECK_THROWS_AS(solve_consecutive_prime_powers(1), std::invalid_argument);

    SUBCASE("limit 100 contains the Fermat prime 17 and Mersenne prime 31")
    {
        const auto s = solve_consecutive_prime_powers(100);
        CHECK(std::find(s.begin(), s.end(), PrimePowerSolution{17, 1, 2, 4, C::Fermat}) != s.end());
        CHECK(std::find(s.begin(), s.end(), PrimePowerSolution{2, 5, 31, 1, C::Mersenne}) != s.end());
    }

    SUBCASE("matches the prime-power set scan")
    {
        for (u64 limit : {2ULL, 10ULL, 100ULL, 5000ULL, 70000ULL}) {
            const auto s = solve_consecutive_prime_powers(limit);
            auto naive = oracle::prime_power_solutions(limit);
            REQUIRE(s.size() == naive.size());
            for (std::size_t i = 0; i < s.size(); ++i) {
                CHECK(std::get<0>(naive[i]) == s[i].p);
                CHECK(std::get<1>(naive[i]) == s[i].m);
                CHECK(std::get<2>(naive[i]) == s[i].q);
                CHECK(std::get<3>(naive[i]) == s[i].n);
            }
        }
    }

    SUBCASE("trichotomy holds in the window")
    {
        for (const auto& s : solve_consecutive_prime_powers(1'000'000)) {
            REQUIRE(checked_pow(s.p, s.m) - 1 == checked_pow(s.q, s.n));
            const int cases = (s.p == 3 && s.m == 2 && s.q == 2 && s.n == 3) + (s.n == 1 && s.p == 2) +
                              (s.m == 1 && s.q == 2);
            REQUIRE(cases == 1);
            REQUIRE(s.tag != C::Unclassified);
        }
    }

    CHECK(classify_prime_power_case(5, 1, 3, 1) == C::Unclassified);
}
