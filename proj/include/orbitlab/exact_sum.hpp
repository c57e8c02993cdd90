#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace orbitlab {

// Order-independent sum of non-negative doubles.
//
// Each addend is split into 32-bit digits of a fixed-point number spanning
// 2^-160 .. 2^128 and added exactly, so any grouping or order of additions
// and merges yields the same state and the same value(). Digits are held in
// signed 64-bit words and carried lazily.
class ExactSum {
public:
    static constexpr int kDigits = 9;
    static constexpr int kFractionBits = 160;

    // Throws InvalidArgument for negative, non-finite or out-of-range input.
    void add(double v);
    void merge(const ExactSum& other);

    // The exact sum rounded to the nearest double (ties to even).
    double value() const;

    // Carried digits, least significant first. Stable across equal sums.
    std::array<std::int64_t, kDigits> digits() const;
    static ExactSum from_digits(const std::array<std::int64_t, kDigits>& digits);

    friend bool operator==(const ExactSum& a, const ExactSum& b) { return a.digits() == b.digits(); }

private:
    void normalize();

    std::array<std::int64_t, kDigits> digits_{};
    std::uint32_t pending_ = 0;  // additions since the last carry pass
};

} // namespace orbitlab
