#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orbitlab/catalog.hpp"
#include "orbitlab/error.hpp"
#include "orbitlab/orbit.hpp"
#include "orbitlab/primes.hpp"

using namespace orbitlab;

namespace {
OrbitRecord rec(std::uint32_t p, std::uint32_t m, std::uint32_t tail, std::uint32_t cycle, bool zero) {
    return OrbitRecord{p, m, tail, cycle, zero};
}
} // namespace

TEST_CASE("iterate_once") {
    CHECK(iterate_once(3, 1, 7) == 3);
    CHECK(iterate_once(0, 0, 5) == 0);
    CHECK(iterate_once(2, 1, 5) == 0);
    // largest operands stay within 64 bits
    const std::uint32_t p = 4294967291u;
    const std::uint64_t z = p - 1;
    CHECK(iterate_once(p - 1, p - 1, p) == static_cast<std::uint32_t>((z * z % p + (p - 1)) % p));
}

TEST_CASE("orbit_stats worked examples") {
    CHECK(orbit_stats(1, 3, 5) == rec(5, 4, 1, 3, true));
    CHECK(orbit_stats(1, 3, 7) == rec(7, 1, 0, 1, false));
    CHECK(orbit_stats(1, 2, 7) == rec(7, 2, 1, 1, false));
    CHECK(orbit_stats(1, 1, 2) == rec(2, 2, 0, 2, true));
    for (const auto& [c, a, p] : {std::tuple{1, 3, 5}, {1, 3, 7}, {1, 2, 7}, {1, 1, 2}}) {
        CHECK(orbit_stats_oracle(c, a, p) == orbit_stats(c, a, p));
    }
}

TEST_CASE("negative parameters and p | alpha") {
    // c = -3 mod 7 is 4; alpha = -1 is 6: 6 -> 40 = 5 -> 29 = 1 -> 5
    CHECK(orbit_stats(-3, -1, 7) == rec(7, 3, 1, 2, false));
    CHECK(orbit_stats(-3, -1, 7) == orbit_stats(4, 6, 7));
    CHECK(orbit_stats(1, 7, 7).zero_hit);
}

TEST_CASE("modulus below 2 is rejected") {
    CHECK_THROWS_AS(orbit_stats(1, 1, 0), InvalidArgument);
    CHECK_THROWS_AS(orbit_stats(1, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(orbit_stats_oracle(1, 1, 1), InvalidArgument);
}

TEST_CASE("record invariants and oracle agreement on random triples") {
    std::mt19937_64 rng(11);
    const auto primes = sieve_range(2, 10'000).primes;
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    std::uniform_int_distribution<std::int64_t> any(-1'000'000, 1'000'000);
    OrbitScratch scratch;
    for (int i = 0; i < 2000; ++i) {
        const std::uint32_t p = primes[pick(rng)];
        const std::int64_t c = any(rng);
        const std::int64_t a = any(rng);
        const auto got = orbit_stats(c, a, p, scratch);
        REQUIRE(got == orbit_stats_oracle(c, a, p));
        CHECK(got.m >= 1);
        CHECK(got.m <= p);
        CHECK(got.cycle >= 1);
        CHECK(got.m == got.tail + got.cycle);
        // translation by p changes nothing
        CHECK(orbit_stats(c + p, a + p, p, scratch) == got);
    }
}

TEST_CASE("seed sign only changes the first iterate") {
    std::mt19937_64 rng(3);
    const auto primes = sieve_range(3, 5'000).primes;
    for (int i = 0; i < 500; ++i) {
        const std::uint32_t p = primes[rng() % primes.size()];
        const std::int64_t c = static_cast<std::int64_t>(rng() % 1000) - 500;
        const std::int64_t a = static_cast<std::int64_t>(rng() % 1000) + 1;
        const auto plus = orbit_stats(c, a, p);
        const auto minus = orbit_stats(c, -a, p);
        CHECK(iterate_once(reduce_mod(a, p), reduce_mod(c, p), p) ==
              iterate_once(reduce_mod(-a, p), reduce_mod(c, p), p));
        const auto diff = static_cast<std::int64_t>(plus.m) - static_cast<std::int64_t>(minus.m);
        CHECK(std::abs(diff) <= 1);
    }
}

TEST_CASE("scratch grows for long orbits and keeps working after reuse") {
    OrbitScratch scratch;
    const std::size_t initial = scratch.capacity();
    // a prime near 2^31 gives an orbit well beyond the initial table
    const std::uint32_t p = 2147483647u;
    const auto big = orbit_stats(1, 3, p, scratch);
    CHECK(big.m > initial / 2);
    CHECK(scratch.capacity() > initial);
    CHECK(big.m == big.tail + big.cycle);
    // small orbit afterwards sees no stale entries
    CHECK(orbit_stats(1, 3, 5, scratch) == rec(5, 4, 1, 3, true));
}

TEST_CASE("full grid against the oracle for p < 1000") {
    OrbitScratch scratch;
    const auto primes = sieve_range(2, 1000).primes;
    for (const auto& seed : default_grid()) {
        for (const auto p : primes) {
            REQUIRE(orbit_stats(seed.c, seed.alpha, p, scratch) == orbit_stats_oracle(seed.c, seed.alpha, p));
        }
    }
}
