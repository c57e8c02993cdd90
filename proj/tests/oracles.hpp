// Independent reference computations used only by the tests.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

inline bool is_prime_trial(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<std::uint32_t> primes_trial(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t n = lo; n < hi; ++n) {
        if (is_prime_trial(n)) out.push_back(static_cast<std::uint32_t>(n));
    }
    return out;
}

// Adaptive Simpson on [a, b].
inline double simpson(const std::function<double(double)>& f, double a, double b, double tol,
                      int depth = 50) {
    auto rule = [&](double lo, double hi, double flo, double fmid, double fhi) {
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    };
    std::function<double(double, double, double, double, double, double, double, int)> rec =
        [&](double lo, double hi, double flo, double fmid, double fhi, double whole, double eps, int d) {
            const double mid = 0.5 * (lo + hi);
            const double lm = 0.5 * (lo + mid);
            const double rm = 0.5 * (mid + hi);
            const double flm = f(lm);
            const double frm = f(rm);
            const double left = rule(lo, mid, flo, flm, fmid);
            const double right = rule(mid, hi, fmid, frm, fhi);
            if (d <= 0 || std::abs(left + right - whole) <= 15.0 * eps) {
                return left + right + (left + right - whole) / 15.0;
            }
            return rec(lo, mid, flo, flm, fmid, left, eps / 2, d - 1) +
                   rec(mid, hi, fmid, frm, fhi, right, eps / 2, d - 1);
        };
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    return rec(a, b, fa, fm, fb, rule(a, b, fa, fm, fb), tol, depth);
}

} // namespace oracle
