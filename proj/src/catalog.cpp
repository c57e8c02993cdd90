#include "orbitlab/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "orbitlab/error.hpp"

namespace orbitlab {

namespace {

using i128 = __int128;

// Exact integer square root of a non-negative 128-bit value below 2^100.
i128 isqrt128(i128 n) {
    auto r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// alpha is one of +-(1 +- sqrt(d)) / 2 for d = 1 - 4c or d = -3 - 4c.
bool matches_half_root(std::int64_t alpha, i128 d) {
    if (d < 0) return false;
    const i128 s = isqrt128(d);
    if (s * s != d) return false;
    // d = 1 mod 4, so s is odd and 1 +- s is even
    const i128 a = alpha;
    for (const i128 root : {(1 + s) / 2, (1 - s) / 2}) {
        if (a == root || a == -root) return true;
    }
    return false;
}

std::int64_t parse_int(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw InvalidArgument("not an integer: '" + std::string(text) + "'");
    }
    return v;
}

} // namespace

std::string to_string(const MapSeed& seed) {
    return "(c=" + std::to_string(seed.c) + ", alpha=" + std::to_string(seed.alpha) + ")";
}

std::vector<std::string> ClassificationFlags::triggered() const {
    std::vector<std::string> out;
    if (finite_case_i) out.emplace_back("finite_case_i");
    if (finite_case_ii) out.emplace_back("finite_case_ii");
    if (finite_case_iii) out.emplace_back("finite_case_iii");
    if (excluded_c) out.emplace_back("excluded_c");
    if (zero_preimage) out.emplace_back("zero_preimage");
    return out;
}

ClassificationFlags classify(const MapSeed& seed) {
    const i128 c = seed.c;
    const i128 a = seed.alpha;
    ClassificationFlags f;
    f.finite_case_i = matches_half_root(seed.alpha, 1 - 4 * c);
    f.finite_case_ii = matches_half_root(seed.alpha, -3 - 4 * c);
    f.finite_case_iii = (a == 0 || a == 1 || a == -1) && (c == 0 || c == -1 || c == -2);
    f.excluded_c = c == 0 || c == -2;
    f.zero_preimage = a * a == -c;
    return f;
}

bool finite_orbit_oracle(const MapSeed& seed) {
    const std::int64_t bound = std::max(std::llabs(seed.alpha), std::llabs(seed.c)) + 2;
    std::vector<std::int64_t> seen;
    std::int64_t z = seed.alpha;
    // Values stay in [-B, B] until escape, so a repeat comes within 2B + 2 steps.
    for (;;) {
        if (z < -bound || z > bound) return false;
        if (std::find(seen.begin(), seen.end(), z) != seen.end()) return true;
        seen.push_back(z);
        z = z * z + seed.c;
    }
}

std::vector<MapSeed> make_grid(const std::vector<std::int64_t>& cs,
                               const std::vector<std::int64_t>& alphas) {
    std::vector<MapSeed> grid;
    grid.reserve(cs.size() * alphas.size());
    for (const auto c : cs) {
        for (const auto a : alphas) grid.push_back({c, a});
    }
    return grid;
}

std::vector<MapSeed> default_grid() {
    std::vector<MapSeed> grid;
    for (const MapSeed& s : make_grid({1, -1, 2, 3, -3}, parse_int_range("1..9"))) {
        const bool finite = (s.c == -3 && (s.alpha == 1 || s.alpha == 2)) ||
                            (s.c == -1 && s.alpha == 1);
        if (!finite) grid.push_back(s);
    }
    return grid;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
    std::vector<std::int64_t> out;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_int(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

std::vector<std::int64_t> parse_int_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) return parse_int_list(text);
    const std::int64_t lo = parse_int(text.substr(0, dots));
    const std::int64_t hi = parse_int(text.substr(dots + 2));
    if (hi < lo) throw InvalidArgument("empty range '" + std::string(text) + "'");
    std::vector<std::int64_t> out;
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

std::vector<MapSeed> parse_grid(std::string_view text) {
    std::vector<std::int64_t> cs;
    std::vector<std::int64_t> alphas;
    bool have_c = false;
    bool have_alpha = false;
    while (!text.empty()) {
        const auto start = text.find_first_not_of(' ');
        if (start == std::string_view::npos) break;
        text.remove_prefix(start);
        const auto end = text.find(' ');
        const std::string_view token = text.substr(0, end);
        text.remove_prefix(end == std::string_view::npos ? text.size() : end);

        if (token.starts_with("c=")) {
            cs = parse_int_list(token.substr(2));
            have_c = true;
        } else if (token.starts_with("alpha=")) {
            alphas = parse_int_range(token.substr(6));
            have_alpha = true;
        } else {
            throw InvalidArgument("unrecognized grid term '" + std::string(token) + "'");
        }
    }
    if (!have_c || !have_alpha) {
        throw InvalidArgument("grid needs both c=... and alpha=...");
    }
    return make_grid(cs, alphas);
}

} // namespace orbitlab
