#include <doctest.h>

#include <cmath>
#include <numbers>

#include "orbitlab/catalog.hpp"
#include "orbitlab/error.hpp"
#include "orbitlab/orbit.hpp"
#include "orbitlab/primes.hpp"
#include "orbitlab/statistics.hpp"

using namespace orbitlab;

namespace {

std::vector<OrbitRecord> records_for(const MapSeed& seed, std::uint64_t x) {
    std::vector<OrbitRecord> out;
    OrbitScratch scratch;
    for (const auto p : sieve_range(0, x + 1).primes) out.push_back(orbit_stats(seed.c, seed.alpha, p, scratch));
    return out;
}

const double kRootHalfPi = std::sqrt(std::numbers::pi / 2.0);

} // namespace

TEST_CASE("accumulate worked examples") {
    const OrbitRecord two{2, 2, 0, 2, true};
    const OrbitRecord five{5, 4, 1, 3, true};

    const auto one = accumulate({}, two);
    CHECK(one.power_sum(1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(one.q_count == 1);
    CHECK(one.count == 1);

    const auto only_five = accumulate({}, five);
    CHECK(only_five.power_sum(2) == doctest::Approx(16.0 / 5.0).epsilon(1e-15));

    const auto both = accumulate(one, five);
    const auto snap = checkpoint(both, 5, 0.0);
    CHECK(snap.M[1] == doctest::Approx(2.6).epsilon(1e-15));
    CHECK(snap.prime_count == 2);
    CHECK(snap.q_count == 2);
}

TEST_CASE("ordering and empty errors") {
    MomentAccumulator acc;
    acc.add({5, 4, 1, 3, true});
    CHECK_THROWS_AS(acc.add({5, 4, 1, 3, true}), OrderingError);
    CHECK_THROWS_AS(acc.add({3, 1, 0, 1, false}), OrderingError);
    CHECK_THROWS_AS(checkpoint(MomentAccumulator{}, 10, 0.0), EmptyAccumulator);
    CHECK_THROWS_AS(checkpoint(acc, 4, 0.0), OrderingError);

    MomentAccumulator early;
    early.add({3, 1, 0, 1, false});
    CHECK_THROWS_AS(acc.merge(early), OrderingError);
}

TEST_CASE("checkpoint q_scaled definition") {
    MomentAccumulator acc;
    acc.add(orbit_stats(1, 3, 2));
    acc.add(orbit_stats(1, 3, 3));
    const auto s = checkpoint(acc, 4, 1.0);
    CHECK(s.q_scaled == doctest::Approx(static_cast<double>(s.q_count) * std::log(4.0) / 2.0).epsilon(1e-15));
    CHECK(s.prime_count == 2);
}

TEST_CASE("merging range accumulators equals one stream bit for bit") {
    const auto recs = records_for({1, 3}, 50'000);
    MomentAccumulator single;
    for (const auto& r : recs) single.add(r);

    for (const std::size_t parts : {2u, 3u, 7u, 50u}) {
        MomentAccumulator merged;
        const std::size_t chunk = recs.size() / parts + 1;
        for (std::size_t start = 0; start < recs.size(); start += chunk) {
            MomentAccumulator piece;
            for (std::size_t i = start; i < std::min(recs.size(), start + chunk); ++i) piece.add(recs[i]);
            merged.merge(piece);
        }
        CHECK(merged == single);
        for (int r = 1; r <= kMoments; ++r) CHECK(merged.power_sum(r) == single.power_sum(r));
    }
}

TEST_CASE("checkpoint sequence properties") {
    const auto recs = records_for({2, 5}, 1u << 15);
    MomentAccumulator acc;
    std::size_t i = 0;
    std::uint64_t prev_q = 0;
    std::uint64_t prev_n = 0;
    std::uint64_t naive_q = 0;
    for (std::uint64_t x = 16; x <= (1u << 15); x *= 2) {
        for (; i < recs.size() && recs[i].p <= x; ++i) {
            acc.add(recs[i]);
            naive_q += recs[i].zero_hit;
        }
        const auto s = checkpoint(acc, x, 0.0);
        CHECK(s.q_count == naive_q);
        CHECK(s.q_count >= prev_q);
        CHECK(s.prime_count >= prev_n);
        CHECK(s.q_count <= s.prime_count);
        CHECK(s.M[1] >= s.M[0] * s.M[0]);  // Jensen
        prev_q = s.q_count;
        prev_n = s.prime_count;
    }
}

TEST_CASE("compute_G") {
    CHECK(compute_G(2) == doctest::Approx(std::log(2.0) / 2.0 * kRootHalfPi).epsilon(1e-15));
    const auto primes = sieve_range(0, 1025).primes;
    CHECK(compute_G(1024, primes) == compute_G(1024));
    CHECK(std::abs(compute_G(1024) - 3.46925) <= 5e-6);
    GAccumulator g;
    g.add(3);
    CHECK_THROWS_AS(g.add(2), OrderingError);
}

TEST_CASE("histogram binning") {
    HistogramSpec spec;
    CHECK(spec.bin_count() == 800);
    CHECK(HistogramSpec{0.3, 1.0}.bin_count() == 4);
    CHECK_THROWS_AS(HistogramSpec({0.0, 1.0}).bin_count(), InvalidArgument);
    CHECK_THROWS_AS(build_histogram({}, 1.0, -1.0), InvalidArgument);

    const std::vector<OrbitRecord> one{{2, 2, 0, 2, true}};
    const auto h = build_histogram(one, spec.w, spec.t_max);
    const auto k = static_cast<std::size_t>(std::floor(std::sqrt(2.0) / spec.w));
    CHECK(h.counts[k] == 1);
    CHECK(h.binned() == 1);
    CHECK(h.bins[k] == doctest::Approx(1.0 / spec.w));
    CHECK(h.x == 2);
    CHECK(h.total_primes == 1);
}

TEST_CASE("histogram mass identity") {
    const auto recs = records_for({1, 3}, 1u << 16);
    const auto full = build_histogram(recs, 5.6 / 800, 5.6);
    std::uint64_t below = 0;
    double largest = 0.0;
    for (const auto& r : recs) {
        const double t = r.m / std::sqrt(static_cast<double>(r.p));
        below += t < 5.6;
        largest = std::max(largest, t);
    }
    CHECK(full.binned() == below);
    CHECK(std::abs(full.mass() - static_cast<double>(below) / recs.size()) <=
          full.bins.size() * std::numeric_limits<double>::epsilon());

    // a range beyond every ratio holds all the mass
    const auto wide = build_histogram(recs, 0.01, std::ceil(largest) + 1.0);
    CHECK(wide.binned() == recs.size());
    CHECK(std::abs(wide.mass() - 1.0) <= wide.bins.size() * std::numeric_limits<double>::epsilon());

    // a narrow range drops the tail
    const auto narrow = build_histogram(recs, 0.01, 1.0);
    CHECK(narrow.binned() < recs.size());
    CHECK(narrow.mass() < 1.0);
}

TEST_CASE("deviation report") {
    CheckpointStats a;
    a.x = 1024;
    a.M = {1.25, 2.0, 3.7, 8.1};
    a.q_scaled = 3.0;
    a.g_of_x = 3.5;
    const std::vector<CheckpointStats> single{a};
    const auto r1 = deviation_report(single);
    CHECK(r1.pairs == 1);
    CHECK(r1.q_scaled.stddev == 0.0);
    CHECK(r1.moments.size() == 8);
    CHECK(r1.moments[0].quantity == "M1");
    CHECK(r1.moments[1].mean == doctest::Approx(std::abs(kRootHalfPi - 1.25)));
    CHECK(r1.moments[7].mean == doctest::Approx(0.1));
    CHECK(r1.g_minus_mean == doctest::Approx(0.5));

    CheckpointStats b = a;
    b.q_scaled = 5.0;
    const std::vector<CheckpointStats> two{a, b};
    const auto r2 = deviation_report(two);
    CHECK(r2.q_scaled.mean == 4.0);
    CHECK(r2.q_scaled.stddev == 1.0);  // population convention
    CHECK(r2.q_scaled.min == 3.0);
    CHECK(r2.q_scaled.max == 5.0);

    CHECK_THROWS_AS(deviation_report({}), InvalidArgument);
    b.x = 2048;
    const std::vector<CheckpointStats> mixed{a, b};
    CHECK_THROWS_AS(deviation_report(mixed), InvalidArgument);
}
