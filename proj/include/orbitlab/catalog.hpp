#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace orbitlab {

// The map z^2 + c together with its starting value.
struct MapSeed {
    std::int64_t c = 0;
    std::int64_t alpha = 0;

    friend auto operator<=>(const MapSeed&, const MapSeed&) = default;
};

std::string to_string(const MapSeed& seed);

// Which exclusion conditions a seed triggers. The conditions are
// independent; c = -2, alpha = 2 sets two of them.
struct ClassificationFlags {
    bool finite_case_i = false;    // alpha^2 + c = +-alpha
    bool finite_case_ii = false;   // alpha^2 + c = +-alpha - 1
    bool finite_case_iii = false;  // alpha in {0, +-1}, c in {0, -1, -2}
    bool excluded_c = false;       // c in {0, -2}
    bool zero_preimage = false;    // alpha^2 = -c

    bool finite_orbit() const { return finite_case_i || finite_case_ii || finite_case_iii; }
    // Seeds whose rho lengths are expected to follow the limit law.
    bool moment_eligible() const { return !finite_orbit() && !excluded_c; }
    // Seeds for which the zero-hit count is expected to scale like sqrt(x)/log x.
    bool zero_hit_eligible() const { return moment_eligible() && !zero_preimage; }

    // Names of the flags that are set, in declaration order.
    std::vector<std::string> triggered() const;

    friend bool operator==(const ClassificationFlags&, const ClassificationFlags&) = default;
};

ClassificationFlags classify(const MapSeed& seed);

// Iterates over the integers until a value repeats (finite orbit) or an
// iterate leaves [-B, B] with B = max(|alpha|, |c|) + 2, after which the
// orbit grows without bound. Requires |c|, |alpha| <= 10^6.
bool finite_orbit_oracle(const MapSeed& seed);

// c in {1, -1, 2, 3, -3} x alpha in 1..9, minus the three finite-orbit
// pairs (-3, 1), (-3, 2), (-1, 1). 42 seeds, c-major.
std::vector<MapSeed> default_grid();

// Cartesian product in the order given, c-major.
std::vector<MapSeed> make_grid(const std::vector<std::int64_t>& cs,
                               const std::vector<std::int64_t>& alphas);

// "1,-1,2,3,-3"
std::vector<std::int64_t> parse_int_list(std::string_view text);
// "1..9" or a plain list "1,2,5"
std::vector<std::int64_t> parse_int_range(std::string_view text);
// "c=1,-1,2,3,-3 alpha=1..9"
std::vector<MapSeed> parse_grid(std::string_view text);

} // namespace orbitlab
