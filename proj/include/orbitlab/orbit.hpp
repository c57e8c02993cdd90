#pragma once

#include <cstdint>
#include <vector>

namespace orbitlab {

// Orbit of alpha under z -> z^2 + c, reduced mod p.
//
// The iterate sequence is eventually periodic: `tail` residues precede the
// cycle entry and the cycle has period `cycle`, so the orbit holds
// m = tail + cycle distinct residues.
struct OrbitRecord {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t tail = 0;
    std::uint32_t cycle = 0;
    bool zero_hit = false;  // 0 appears among f^0(alpha) .. f^(m-1)(alpha)

    friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

// (z^2 + c) mod p with z, c < p < 2^32. z^2 + c fits in 64 bits.
constexpr std::uint32_t iterate_once(std::uint32_t z, std::uint32_t c, std::uint32_t p) {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(z) * z + c) % p);
}

// Maps any integer into [0, p).
constexpr std::uint32_t reduce_mod(std::int64_t v, std::uint32_t p) {
    const std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

// Visited-residue table reused across primes by a single worker.
//
// Open addressing keyed on the residue; each slot carries the generation
// that wrote it, so starting a new orbit is O(1) instead of a clear.
class OrbitScratch {
public:
    OrbitScratch();

    OrbitScratch(const OrbitScratch&) = delete;
    OrbitScratch& operator=(const OrbitScratch&) = delete;
    OrbitScratch(OrbitScratch&&) = default;
    OrbitScratch& operator=(OrbitScratch&&) = default;

    std::size_t capacity() const { return slots_.size(); }

private:
    friend OrbitRecord orbit_stats(std::int64_t, std::int64_t, std::uint32_t, OrbitScratch&);

    struct Slot {
        std::uint32_t generation;
        std::uint32_t residue;
        std::uint32_t step;
    };

    void begin();
    void grow();

    std::vector<Slot> slots_;
    std::uint32_t shift_ = 0;
    std::uint32_t generation_ = 0;
};

// Size, tail/cycle split and zero hit of the orbit of alpha mod p under
// z^2 + c. c and alpha may be negative. p must be prime (unchecked);
// p < 2 throws InvalidArgument.
OrbitRecord orbit_stats(std::int64_t c, std::int64_t alpha, std::uint32_t p, OrbitScratch& scratch);
OrbitRecord orbit_stats(std::int64_t c, std::int64_t alpha, std::uint32_t p);

// Reference version: appends iterates to a list and scans it for the first
// repeat. Quadratic in m; meant for p <= 10^4.
OrbitRecord orbit_stats_oracle(std::int64_t c, std::int64_t alpha, std::uint32_t p);

} // namespace orbitlab
