#include "orbitlab/exact_sum.hpp"

#include <cmath>
#include <string>

#include "orbitlab/error.hpp"

namespace orbitlab {

namespace {
constexpr std::uint32_t kCarryEvery = 1u << 28;
constexpr std::int64_t kDigitMask = 0xFFFFFFFFll;
} // namespace

void ExactSum::add(double v) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw InvalidArgument("ExactSum takes finite non-negative values, got " + std::to_string(v));
    }
    if (v == 0.0) return;

    int exp = 0;
    const double frac = std::frexp(v, &exp);  // v = frac * 2^exp, frac in [0.5, 1)
    auto mant = static_cast<std::uint64_t>(std::ldexp(frac, 53));
    // v = mant * 2^(exp - 53); position of the mantissa's low bit in the fixed point
    int low_bit = exp - 53 + kFractionBits;
    if (low_bit < 0) {
        // below 2^-160: drop the bits that do not fit (never hit by the moment sums)
        if (low_bit <= -53) return;
        mant >>= -low_bit;
        low_bit = 0;
    }
    if (low_bit + 53 > 32 * kDigits - 1) {
        throw InvalidArgument("ExactSum addend too large: " + std::to_string(v));
    }

    const int digit = low_bit / 32;
    const int shift = low_bit % 32;
    // spread mant << shift (at most 85 bits) over three digits
    const unsigned __int128 wide = static_cast<unsigned __int128>(mant) << shift;
    digits_[digit] += static_cast<std::int64_t>(wide & kDigitMask);
    if (digit + 1 < kDigits) digits_[digit + 1] += static_cast<std::int64_t>((wide >> 32) & kDigitMask);
    if (digit + 2 < kDigits) digits_[digit + 2] += static_cast<std::int64_t>((wide >> 64) & kDigitMask);

    if (++pending_ >= kCarryEvery) normalize();
}

void ExactSum::merge(const ExactSum& other) {
    ExactSum rhs = other;
    rhs.normalize();
    normalize();
    for (int i = 0; i < kDigits; ++i) digits_[i] += rhs.digits_[i];
    normalize();
}

void ExactSum::normalize() {
    std::int64_t carry = 0;
    for (int i = 0; i < kDigits; ++i) {
        const std::int64_t d = digits_[i] + carry;
        digits_[i] = d & kDigitMask;
        carry = d >> 32;
    }
    if (carry != 0) throw InvalidArgument("ExactSum overflow");
    pending_ = 0;
}

std::array<std::int64_t, ExactSum::kDigits> ExactSum::digits() const {
    ExactSum copy = *this;
    copy.normalize();
    return copy.digits_;
}

ExactSum ExactSum::from_digits(const std::array<std::int64_t, kDigits>& digits) {
    ExactSum s;
    for (const auto d : digits) {
        if (d < 0 || d > kDigitMask) throw InvalidArgument("ExactSum digit out of range");
    }
    s.digits_ = digits;
    return s;
}

double ExactSum::value() const {
    const auto d = digits();
    int top = kDigits - 1;
    while (top >= 0 && d[top] == 0) --top;
    if (top < 0) return 0.0;

    // Top 96 bits hold the significand and the rounding bits; lower digits
    // only feed the sticky bit.
    unsigned __int128 head = 0;
    int used = 0;
    for (int i = top; i >= 0 && used < 3; --i, ++used) {
        head = (head << 32) | static_cast<std::uint32_t>(d[i]);
    }
    const int low_digit = top - used + 1;
    bool sticky = false;
    for (int i = low_digit - 1; i >= 0; --i) sticky |= d[i] != 0;

    int bits = 0;
    for (unsigned __int128 t = head; t != 0; t >>= 1) ++bits;
    const int drop = bits > 53 ? bits - 53 : 0;
    std::uint64_t mant = static_cast<std::uint64_t>(head >> drop);
    if (drop > 0) {
        const unsigned __int128 rest = head & ((static_cast<unsigned __int128>(1) << drop) - 1);
        const unsigned __int128 half = static_cast<unsigned __int128>(1) << (drop - 1);
        if (rest > half || (rest == half && (sticky || (mant & 1)))) ++mant;
    }
    return std::ldexp(static_cast<double>(mant), 32 * low_digit + drop - kFractionBits);
}

} // namespace orbitlab
