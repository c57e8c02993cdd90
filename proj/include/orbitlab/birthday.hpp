#pragma once

#include <cstdint>
#include <random>

namespace orbitlab {

// X_n: number of uniform draws with replacement from {1..n} until the
// first repeat. Support is {2, ..., n+1}.
class BirthdayDistribution {
public:
    explicit BirthdayDistribution(std::uint64_t n);  // throws for n == 0

    std::uint64_t days() const { return n_; }

    // P(X_n > k): the first k draws are all distinct.
    double tail(std::uint64_t k) const;
    // E[(X_n / sqrt n)^r], r in 1..4, by direct summation. n <= 10^8.
    double moment(int r) const;

private:
    std::uint64_t n_;
};

// Probability that among k+1 uniform draws from p values at least two agree:
// 1 - prod_{j=1..k} (p - j)/p. Returns exactly 1 for k >= p; throws
// InvalidArgument for k < 0 or p < 1.
double collision_prob(std::int64_t k, std::int64_t p);

// P(X_n > k) = prod_{j=1..k-1} (1 - j/n); 1 for k <= 1, 0 for k > n + 1.
double tail_prob(std::uint64_t n, std::uint64_t k);

// E[(X_n / sqrt n)^r] for 1 <= r <= 4, 1 <= n <= 10^8.
double exact_moment(std::uint64_t n, int r);

// Limit law of X_n / sqrt n: F(t) = 1 - exp(-t^2/2), f(t) = t exp(-t^2/2).
// Both are 0 for t < 0.
double limit_cdf(double t);
double limit_pdf(double t);

// r-th moment of the limit law: r(r-2)...2 for even r, r(r-2)...1 * sqrt(pi/2)
// for odd r. Throws InvalidArgument for r <= 0.
double limit_moment(int r);

// Draws from `rng` until the first repeat; returns the number of draws.
std::uint64_t sample_collision_time(std::uint64_t n, std::mt19937_64& rng);

} // namespace orbitlab
