#include "orbitlab/birthday.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <unordered_set>

#include "orbitlab/error.hpp"

namespace orbitlab {

namespace {

constexpr std::uint64_t kLogSpaceAbove = 10'000;
constexpr std::uint64_t kMaxExactDays = 100'000'000;

// prod_{j=1..terms} (n - j)/n with terms < n. The same factors serve the
// collision and tail formulations so they agree bit for bit.
double distinct_prob(std::uint64_t n, std::uint64_t terms) {
    const double nd = static_cast<double>(n);
    if (terms > kLogSpaceAbove) {
        double log_sum = 0.0;
        for (std::uint64_t j = 1; j <= terms; ++j) {
            log_sum += std::log1p(-static_cast<double>(j) / nd);
        }
        return std::exp(log_sum);
    }
    double prod = 1.0;
    for (std::uint64_t j = 1; j <= terms; ++j) prod *= static_cast<double>(n - j) / nd;
    return prod;
}

} // namespace

BirthdayDistribution::BirthdayDistribution(std::uint64_t n) : n_(n) {
    if (n == 0) throw InvalidArgument("birthday distribution needs n >= 1");
}

double BirthdayDistribution::tail(std::uint64_t k) const {
    return tail_prob(n_, k);
}

double BirthdayDistribution::moment(int r) const {
    return exact_moment(n_, r);
}

double collision_prob(std::int64_t k, std::int64_t p) {
    if (p < 1) throw InvalidArgument("collision_prob needs p >= 1");
    if (k < 0) throw InvalidArgument("collision_prob needs k >= 0");
    if (k >= p) return 1.0;
    return 1.0 - distinct_prob(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(k));
}

double tail_prob(std::uint64_t n, std::uint64_t k) {
    if (n == 0) throw InvalidArgument("tail_prob needs n >= 1");
    if (k <= 1) return 1.0;
    if (k > n + 1) return 0.0;
    return distinct_prob(n, k - 1);
}

double exact_moment(std::uint64_t n, int r) {
    if (n == 0 || n > kMaxExactDays) {
        throw InvalidArgument("exact_moment needs 1 <= n <= 10^8, got " + std::to_string(n));
    }
    if (r < 1 || r > 4) throw InvalidArgument("exact_moment needs 1 <= r <= 4");

    const double nd = static_cast<double>(n);
    const double root = std::sqrt(nd);
    double total = 0.0;
    double prev_tail = 1.0;  // P(X > 1)
    for (std::uint64_t k = 2; k <= n + 1; ++k) {
        // P(X > k) = P(X > k-1) * (1 - (k-1)/n)
        const double tail = prev_tail * (static_cast<double>(n - (k - 1)) / nd);
        const double mass = prev_tail - tail;
        total += std::pow(static_cast<double>(k) / root, r) * mass;
        prev_tail = tail;
        if (prev_tail == 0.0) break;
    }
    return total;
}

double limit_cdf(double t) {
    if (t <= 0.0) return 0.0;
    return -std::expm1(-0.5 * t * t);
}

double limit_pdf(double t) {
    if (t <= 0.0) return 0.0;
    return t * std::exp(-0.5 * t * t);
}

double limit_moment(int r) {
    if (r <= 0) throw InvalidArgument("limit_moment needs r >= 1, got " + std::to_string(r));
    double v = (r % 2 == 0) ? 1.0 : std::sqrt(std::numbers::pi / 2.0);
    for (int j = r; j > 0; j -= 2) v *= j;
    return v;
}

std::uint64_t sample_collision_time(std::uint64_t n, std::mt19937_64& rng) {
    if (n == 0) throw InvalidArgument("sample_collision_time needs n >= 1");
    std::uniform_int_distribution<std::uint64_t> day(1, n);
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t draws = 1;; ++draws) {
        if (!seen.insert(day(rng)).second) return draws;
    }
}

} // namespace orbitlab
