#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace orbitlab {

inline constexpr std::uint64_t kMaxSieveBound = std::uint64_t{1} << 32;

// Default sieve block, in integers. Odd-only storage puts 512 KiB of flags
// per block.
inline constexpr std::uint64_t kSieveBlock = std::uint64_t{1} << 20;

// The primes in [lo, hi), ascending. Immutable once built.
struct PrimeRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::vector<std::uint32_t> primes;
};

// Floor of the square root, exact for all 64-bit inputs.
std::uint64_t isqrt(std::uint64_t n);

// Sieves ranges below a fixed limit. Holds the odd base primes up to
// sqrt(limit) so repeated ranges do not re-derive them.
class SegmentedSieve {
public:
    // Ranges may end anywhere up to `limit` (exclusive, <= 2^32).
    explicit SegmentedSieve(std::uint64_t limit, std::uint64_t block = kSieveBlock);

    std::uint64_t limit() const { return limit_; }

    // Exactly the primes in [lo, hi). Throws InvalidArgument if hi <= lo or
    // hi exceeds limit().
    PrimeRange range(std::uint64_t lo, std::uint64_t hi) const;

    // Counts primes in [lo, hi) without materializing them.
    std::uint64_t count(std::uint64_t lo, std::uint64_t hi) const;

    // Streams [lo, hi) to `sink` block by block in ascending order.
    void for_each_block(std::uint64_t lo, std::uint64_t hi,
                        const std::function<void(const PrimeRange&)>& sink) const;

private:
    // Clears composites among the odd numbers of [lo, hi); flags[i] stands
    // for first_odd + 2i.
    void mark_block(std::uint64_t lo, std::uint64_t hi, std::vector<std::uint8_t>& flags,
                    std::uint64_t& first_odd) const;

    std::uint64_t limit_;
    std::uint64_t block_;
    std::vector<std::uint32_t> base_primes_;  // odd primes <= sqrt(limit)
};

// Primes in [lo, hi); 0 <= lo < hi <= 2^32.
PrimeRange sieve_range(std::uint64_t lo, std::uint64_t hi);

// pi(x), the number of primes <= x.
std::uint64_t prime_count(std::uint64_t x);

// Rosser's explicit bounds x/(ln x + 2) < pi(x) < x/(ln x - 4). Valid for
// x >= 55; below that throws DomainError.
bool rosser_check(std::uint64_t x, std::uint64_t pi_x);

} // namespace orbitlab
