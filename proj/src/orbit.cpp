#include "orbitlab/orbit.hpp"

#include <algorithm>
#include <string>

#include "orbitlab/error.hpp"

namespace orbitlab {

namespace {

constexpr std::uint32_t kInitialBits = 12;

// Fibonacci hashing; iterates of z^2 + c are already well mixed.
inline std::size_t slot_of(std::uint32_t residue, std::uint32_t shift) {
    return static_cast<std::uint32_t>(residue * 0x9E3779B1u) >> shift;
}

// z^2 + c mod p via a precomputed reciprocal: one widening multiply in
// place of a 64-bit division. Same result as iterate_once.
struct SquarePlusC {
    std::uint64_t p;
    std::uint64_t c;
    std::uint64_t recip;  // floor(2^64 / p), p >= 2

    SquarePlusC(std::uint32_t modulus, std::uint32_t addend)
        : p(modulus), c(addend),
          recip(static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / modulus)) {}

    std::uint32_t operator()(std::uint32_t z) const {
        const std::uint64_t v = static_cast<std::uint64_t>(z) * z + c;
        const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * recip) >> 64);
        std::uint64_t r = v - q * p;  // q is at most one short
        if (r >= p) r -= p;
        return static_cast<std::uint32_t>(r);
    }
};

void check_modulus(std::uint32_t p) {
    if (p < 2) throw InvalidArgument("invalid modulus " + std::to_string(p));
}

} // namespace

OrbitScratch::OrbitScratch()
    : slots_(std::size_t{1} << kInitialBits, Slot{0, 0, 0}), shift_(32 - kInitialBits) {}

void OrbitScratch::begin() {
    if (++generation_ == 0) {
        std::fill(slots_.begin(), slots_.end(), Slot{0, 0, 0});
        generation_ = 1;
    }
}

void OrbitScratch::grow() {
    std::vector<Slot> old(slots_.size() * 2, Slot{0, 0, 0});
    old.swap(slots_);
    --shift_;
    const std::size_t mask = slots_.size() - 1;
    for (const Slot& s : old) {
        if (s.generation != generation_) continue;
        std::size_t i = slot_of(s.residue, shift_);
        while (slots_[i].generation == generation_) i = (i + 1) & mask;
        slots_[i] = s;
    }
}

OrbitRecord orbit_stats(std::int64_t c, std::int64_t alpha, std::uint32_t p,
                        OrbitScratch& scratch) {
    check_modulus(p);
    const std::uint32_t cr = reduce_mod(c, p);
    std::uint32_t z = reduce_mod(alpha, p);
    const SquarePlusC step_map(p, cr);

    scratch.begin();
    const std::uint32_t gen = scratch.generation_;
    std::size_t mask = scratch.slots_.size() - 1;
    std::size_t grow_at = scratch.slots_.size() / 2;

    OrbitRecord rec;
    rec.p = p;
    for (std::uint32_t step = 0;; ++step) {
        std::size_t i = slot_of(z, scratch.shift_);
        auto* slots = scratch.slots_.data();
        while (slots[i].generation == gen) {
            if (slots[i].residue == z) {
                rec.m = step;
                rec.tail = slots[i].step;
                rec.cycle = step - slots[i].step;
                return rec;
            }
            i = (i + 1) & mask;
        }
        slots[i] = {gen, z, step};
        rec.zero_hit |= (z == 0);
        z = step_map(z);

        if (step + 1 >= grow_at) {
            scratch.grow();
            mask = scratch.slots_.size() - 1;
            grow_at = scratch.slots_.size() / 2;
        }
    }
}

OrbitRecord orbit_stats(std::int64_t c, std::int64_t alpha, std::uint32_t p) {
    OrbitScratch scratch;
    return orbit_stats(c, alpha, p, scratch);
}

OrbitRecord orbit_stats_oracle(std::int64_t c, std::int64_t alpha, std::uint32_t p) {
    check_modulus(p);
    const std::uint64_t pp = p;
    const std::uint64_t cc = static_cast<std::uint64_t>(((c % std::int64_t(p)) + std::int64_t(p)) % std::int64_t(p));
    std::uint64_t z = static_cast<std::uint64_t>(((alpha % std::int64_t(p)) + std::int64_t(p)) % std::int64_t(p));

    std::vector<std::uint64_t> seen;
    for (;;) {
        const auto hit = std::find(seen.begin(), seen.end(), z);
        if (hit != seen.end()) {
            OrbitRecord rec;
            rec.p = p;
            rec.m = static_cast<std::uint32_t>(seen.size());
            rec.tail = static_cast<std::uint32_t>(hit - seen.begin());
            rec.cycle = rec.m - rec.tail;
            rec.zero_hit = std::find(seen.begin(), seen.end(), 0u) != seen.end();
            return rec;
        }
        seen.push_back(z);
        z = (z * z + cc) % pp;
    }
}

} // namespace orbitlab
