#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "orbitlab/error.hpp"
#include "orbitlab/exact_sum.hpp"

using namespace orbitlab;

TEST_CASE("exact on representable sums") {
    ExactSum s;
    CHECK(s.value() == 0.0);
    s.add(1.0);
    s.add(0.5);
    s.add(0x1p-100);
    s.add(0x1p100);
    CHECK(s.value() == 0x1p100);  // the small parts are far below one ulp
    ExactSum t;
    t.add(0x1p-100);
    t.add(0x1p-100);
    CHECK(t.value() == 0x1p-99);
}

TEST_CASE("avoids naive cancellation loss") {
    ExactSum s;
    s.add(1e16);
    for (int i = 0; i < 1000; ++i) s.add(1.0);
    CHECK(s.value() == 1e16 + 1000.0);
}

TEST_CASE("rounds to nearest, ties to even") {
    ExactSum odd_tie;
    odd_tie.add(1.0);
    odd_tie.add(0x1p-53);  // exactly half an ulp of 1.0
    CHECK(odd_tie.value() == 1.0);
    ExactSum above;
    above.add(1.0);
    above.add(0x1p-53);
    above.add(0x1p-120);
    CHECK(above.value() == 1.0 + 0x1p-52);
}

TEST_CASE("order and grouping do not matter") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(20'000);
    for (auto& x : v) x = std::pow(u(rng) * 4.0, 4.0);

    ExactSum forward;
    for (const double x : v) forward.add(x);

    auto shuffled = v;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    ExactSum a;
    ExactSum b;
    for (std::size_t i = 0; i < shuffled.size(); ++i) (i % 3 == 0 ? a : b).add(shuffled[i]);
    b.merge(a);

    CHECK(b == forward);
    CHECK(b.value() == forward.value());
    CHECK(ExactSum::from_digits(forward.digits()) == forward);

    long double reference = 0.0L;
    for (const double x : v) reference += x;
    CHECK(std::abs(forward.value() - static_cast<double>(reference)) <= 1e-12 * forward.value());
}

TEST_CASE("rejects invalid addends") {
    ExactSum s;
    CHECK_THROWS_AS(s.add(-1.0), InvalidArgument);
    CHECK_THROWS_AS(s.add(std::nan("")), InvalidArgument);
    CHECK_THROWS_AS(s.add(INFINITY), InvalidArgument);
    CHECK_THROWS_AS(s.add(0x1p200), InvalidArgument);
}
