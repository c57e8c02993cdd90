#include "orbitlab/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orbitlab/error.hpp"

namespace orbitlab {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    // sqrt of a value near 2^64 can round up past 2^32 - 1
    r = std::min<std::uint64_t>(r, 0xFFFFFFFFull);
    while (r * r > n) --r;
    while (r < 0xFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

SegmentedSieve::SegmentedSieve(std::uint64_t limit, std::uint64_t block)
    : limit_(limit), block_(block) {
    if (limit > kMaxSieveBound) {
        throw InvalidArgument("sieve limit " + std::to_string(limit) + " exceeds 2^32");
    }
    if (block < 2) throw InvalidArgument("sieve block must hold at least two integers");

    const std::uint64_t root = limit == 0 ? 0 : isqrt(limit - 1);
    std::vector<std::uint8_t> small(root + 1, 1);
    for (std::uint64_t i = 3; i * i <= root; i += 2) {
        if (!small[i]) continue;
        for (std::uint64_t j = i * i; j <= root; j += 2 * i) small[j] = 0;
    }
    for (std::uint64_t i = 3; i <= root; i += 2) {
        if (small[i]) base_primes_.push_back(static_cast<std::uint32_t>(i));
    }
}

void SegmentedSieve::mark_block(std::uint64_t lo, std::uint64_t hi,
                                std::vector<std::uint8_t>& flags,
                                std::uint64_t& first_odd) const {
    first_odd = lo | 1;
    const std::uint64_t n_odd = hi > first_odd ? (hi - first_odd + 1) / 2 : 0;
    flags.assign(n_odd, 1);
    if (n_odd == 0) return;
    if (first_odd == 1) flags[0] = 0;

    for (const std::uint64_t q : base_primes_) {
        const std::uint64_t sq = q * q;
        if (sq >= hi) break;
        std::uint64_t start = (first_odd + q - 1) / q * q;
        if ((start & 1) == 0) start += q;
        start = std::max(start, sq);
        for (std::uint64_t j = (start - first_odd) / 2; j < n_odd; j += q) flags[j] = 0;
    }
}

PrimeRange SegmentedSieve::range(std::uint64_t lo, std::uint64_t hi) const {
    PrimeRange out{lo, hi, {}};
    for_each_block(lo, hi, [&out](const PrimeRange& block) {
        out.primes.insert(out.primes.end(), block.primes.begin(), block.primes.end());
    });
    return out;
}

std::uint64_t SegmentedSieve::count(std::uint64_t lo, std::uint64_t hi) const {
    std::uint64_t total = 0;
    for_each_block(lo, hi, [&total](const PrimeRange& block) { total += block.primes.size(); });
    return total;
}

void SegmentedSieve::for_each_block(std::uint64_t lo, std::uint64_t hi,
                                    const std::function<void(const PrimeRange&)>& sink) const {
    if (hi <= lo) {
        throw InvalidArgument("invalid range [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + ")");
    }
    if (hi > limit_) {
        throw InvalidArgument("range end " + std::to_string(hi) + " beyond sieve limit " +
                              std::to_string(limit_));
    }

    std::vector<std::uint8_t> flags;
    PrimeRange block;
    for (std::uint64_t blo = lo; blo < hi;) {
        const std::uint64_t bhi = std::min(hi, blo + block_);
        std::uint64_t first_odd = 0;
        mark_block(blo, bhi, flags, first_odd);

        block.lo = blo;
        block.hi = bhi;
        block.primes.clear();
        if (blo <= 2 && 2 < bhi) block.primes.push_back(2);
        for (std::size_t i = 0; i < flags.size(); ++i) {
            if (flags[i]) block.primes.push_back(static_cast<std::uint32_t>(first_odd + 2 * i));
        }
        sink(block);
        blo = bhi;
    }
}

PrimeRange sieve_range(std::uint64_t lo, std::uint64_t hi) {
    if (hi <= lo) {
        throw InvalidArgument("invalid range [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + ")");
    }
    return SegmentedSieve(hi).range(lo, hi);
}

std::uint64_t prime_count(std::uint64_t x) {
    if (x < 2) return 0;
    // 2^32 itself is composite, so everything above it adds nothing we can sieve
    const std::uint64_t end = std::min(x + 1, kMaxSieveBound);
    return SegmentedSieve(end).count(0, end);
}

bool rosser_check(std::uint64_t x, std::uint64_t pi_x) {
    if (x < 55) {
        throw DomainError("Rosser bounds hold only for x >= 55, got " + std::to_string(x));
    }
    const double xd = static_cast<double>(x);
    const double lx = std::log(xd);
    const double pi = static_cast<double>(pi_x);
    return xd / (lx + 2.0) < pi && pi < xd / (lx - 4.0);
}

} // namespace orbitlab
