#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orbitlab/exact_sum.hpp"
#include "orbitlab/orbit.hpp"

namespace orbitlab {

inline constexpr int kMoments = 4;

// Running sums of (m_p / sqrt p)^r for r = 1..4 plus zero-hit count over an
// ascending run of primes.
//
// The power sums are exact (see ExactSum), so accumulators built over
// consecutive prime ranges and merged give the same bits as one stream.
struct MomentAccumulator {
    std::array<ExactSum, kMoments> power_sums{};
    std::uint64_t count = 0;
    std::uint64_t q_count = 0;
    std::uint32_t first_prime = 0;
    std::uint32_t last_prime = 0;

    // Throws OrderingError unless rec.p > last_prime.
    void add(const OrbitRecord& rec);
    // Appends a run of strictly larger primes. Throws OrderingError otherwise.
    void merge(const MomentAccumulator& later);

    double power_sum(int r) const { return power_sums.at(r - 1).value(); }
    bool empty() const { return count == 0; }

    friend bool operator==(const MomentAccumulator&, const MomentAccumulator&) = default;
};

MomentAccumulator accumulate(MomentAccumulator acc, const OrbitRecord& rec);

// Aggregates for one seed at bound x.
struct CheckpointStats {
    std::uint64_t x = 0;
    std::uint64_t prime_count = 0;
    std::array<double, kMoments> M{};  // M[r-1] = power_sum(r) / prime_count
    std::uint64_t q_count = 0;
    double q_scaled = 0.0;  // q_count * ln x / sqrt x
    double g_of_x = 0.0;

    friend bool operator==(const CheckpointStats&, const CheckpointStats&) = default;
};

// Snapshot at x given G(x). Throws EmptyAccumulator if nothing was added.
CheckpointStats checkpoint(const MomentAccumulator& acc, std::uint64_t x, double g);

// ln x / sqrt x, natural log.
double log_over_sqrt(std::uint64_t x);

// G(x) = (ln x / sqrt x) * sum_{p <= x} sqrt(pi/2) / sqrt p, summed over
// primes fed in ascending order.
class GAccumulator {
public:
    // Throws OrderingError on a non-increasing prime.
    void add(std::uint32_t p);
    void add(std::span<const std::uint32_t> primes);
    double value(std::uint64_t x) const;

    double inverse_sqrt_sum() const { return sum_; }
    std::uint32_t last_prime() const { return last_; }
    static GAccumulator restore(double inverse_sqrt_sum, std::uint32_t last_prime);

private:
    double sum_ = 0.0;
    std::uint32_t last_ = 0;
};

// `primes` must be exactly the primes <= x, ascending.
double compute_G(std::uint64_t x, std::span<const std::uint32_t> primes);
// Sieves the primes <= x itself.
double compute_G(std::uint64_t x);

struct HistogramSpec {
    double w = 5.6 / 800.0;
    double t_max = 5.6;

    std::size_t bin_count() const;
};

// Empirical density of m_p / sqrt p: bins[k] counts wk <= t < w(k+1)
// divided by w * total_primes.
struct Histogram {
    double w = 0.0;
    double t_max = 0.0;
    std::uint64_t x = 0;
    std::uint64_t total_primes = 0;
    std::vector<std::uint64_t> counts;
    std::vector<double> bins;

    std::uint64_t binned() const;  // primes with ratio below t_max
    double mass() const;           // sum of bins[k] * w
};

class HistogramBuilder {
public:
    explicit HistogramBuilder(HistogramSpec spec);

    void add(const OrbitRecord& rec);
    void merge(const HistogramBuilder& other);
    Histogram finish(std::uint64_t x) const;

    const HistogramSpec& spec() const { return spec_; }
    const std::vector<std::uint64_t>& counts() const { return counts_; }
    std::uint64_t total() const { return total_; }
    static HistogramBuilder restore(HistogramSpec spec, std::vector<std::uint64_t> counts,
                                    std::uint64_t total);

private:
    HistogramSpec spec_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

// Throws InvalidArgument unless w > 0 and t_max > 0. x defaults to the
// largest prime among the records.
Histogram build_histogram(std::span<const OrbitRecord> records, double w, double t_max,
                          std::uint64_t x = 0);

// mean / population standard deviation / min / max across seeds
struct Summary {
    std::string quantity;
    double mean = 0.0;
    double stddev = 0.0;
    double min = 0.0;
    double max = 0.0;
};

Summary summarize(std::string quantity, std::span<const double> values);

// Spread of checkpoint results across seeds at one bound x.
struct DeviationReport {
    std::uint64_t x = 0;
    std::size_t pairs = 0;
    // M1, |mu1 - M1|, M2, |mu2 - M2|, M3, |mu3 - M3|, M4, |mu4 - M4|
    std::vector<Summary> moments;
    Summary q_scaled;
    double g_of_x = 0.0;
    double g_minus_mean = 0.0;  // |G(x) - mean q_scaled|
};

// All entries must share one x; throws InvalidArgument if empty or mixed.
DeviationReport deviation_report(std::span<const CheckpointStats> stats);

} // namespace orbitlab
