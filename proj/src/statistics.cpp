#include "orbitlab/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "orbitlab/birthday.hpp"
#include "orbitlab/error.hpp"
#include "orbitlab/primes.hpp"

namespace orbitlab {

void MomentAccumulator::add(const OrbitRecord& rec) {
    if (rec.p <= last_prime) {
        throw OrderingError("prime " + std::to_string(rec.p) + " after " +
                            std::to_string(last_prime));
    }
    const double t = static_cast<double>(rec.m) / std::sqrt(static_cast<double>(rec.p));
    const double t2 = t * t;
    power_sums[0].add(t);
    power_sums[1].add(t2);
    power_sums[2].add(t2 * t);
    power_sums[3].add(t2 * t2);
    if (count == 0) first_prime = rec.p;
    ++count;
    q_count += rec.zero_hit ? 1 : 0;
    last_prime = rec.p;
}

void MomentAccumulator::merge(const MomentAccumulator& later) {
    if (later.empty()) return;
    if (later.first_prime <= last_prime) {
        throw OrderingError("merging a range starting at " + std::to_string(later.first_prime) +
                            " after " + std::to_string(last_prime));
    }
    for (int r = 0; r < kMoments; ++r) power_sums[r].merge(later.power_sums[r]);
    if (count == 0) first_prime = later.first_prime;
    count += later.count;
    q_count += later.q_count;
    last_prime = later.last_prime;
}

MomentAccumulator accumulate(MomentAccumulator acc, const OrbitRecord& rec) {
    acc.add(rec);
    return acc;
}

double log_over_sqrt(std::uint64_t x) {
    const double xd = static_cast<double>(x);
    return std::log(xd) / std::sqrt(xd);
}

CheckpointStats checkpoint(const MomentAccumulator& acc, std::uint64_t x, double g) {
    if (acc.empty()) throw EmptyAccumulator("checkpoint on an empty accumulator");
    if (acc.last_prime > x) {
        throw OrderingError("accumulator holds prime " + std::to_string(acc.last_prime) +
                            " beyond checkpoint " + std::to_string(x));
    }
    CheckpointStats s;
    s.x = x;
    s.prime_count = acc.count;
    const double n = static_cast<double>(acc.count);
    for (int r = 1; r <= kMoments; ++r) s.M[r - 1] = acc.power_sum(r) / n;
    s.q_count = acc.q_count;
    s.q_scaled = static_cast<double>(acc.q_count) * log_over_sqrt(x);
    s.g_of_x = g;
    return s;
}

void GAccumulator::add(std::uint32_t p) {
    if (p <= last_) {
        throw OrderingError("G(x) prime " + std::to_string(p) + " after " + std::to_string(last_));
    }
    sum_ += 1.0 / std::sqrt(static_cast<double>(p));
    last_ = p;
}

void GAccumulator::add(std::span<const std::uint32_t> primes) {
    for (const auto p : primes) add(p);
}

double GAccumulator::value(std::uint64_t x) const {
    return log_over_sqrt(x) * std::sqrt(std::numbers::pi / 2.0) * sum_;
}

GAccumulator GAccumulator::restore(double inverse_sqrt_sum, std::uint32_t last_prime) {
    GAccumulator g;
    g.sum_ = inverse_sqrt_sum;
    g.last_ = last_prime;
    return g;
}

double compute_G(std::uint64_t x, std::span<const std::uint32_t> primes) {
    GAccumulator g;
    g.add(primes);
    return g.value(x);
}

double compute_G(std::uint64_t x) {
    GAccumulator g;
    if (x >= 2) {
        const std::uint64_t end = std::min(x + 1, kMaxSieveBound);
        SegmentedSieve(end).for_each_block(0, end, [&g](const PrimeRange& r) { g.add(r.primes); });
    }
    return g.value(x);
}

std::size_t HistogramSpec::bin_count() const {
    if (!(w > 0.0) || !(t_max > 0.0)) {
        throw InvalidArgument("histogram needs w > 0 and t_max > 0");
    }
    const double ratio = t_max / w;
    const double nearest = std::round(ratio);
    // 5.6 / (5.6 / 800) lands a few ulps off 800
    if (std::abs(ratio - nearest) < 1e-9 * nearest) return static_cast<std::size_t>(nearest);
    return static_cast<std::size_t>(std::ceil(ratio));
}

std::uint64_t Histogram::binned() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

double Histogram::mass() const {
    double m = 0.0;
    for (const double b : bins) m += b * w;
    return m;
}

HistogramBuilder::HistogramBuilder(HistogramSpec spec)
    : spec_(spec), counts_(spec.bin_count(), 0) {}

void HistogramBuilder::add(const OrbitRecord& rec) {
    ++total_;
    const double t = static_cast<double>(rec.m) / std::sqrt(static_cast<double>(rec.p));
    if (t >= spec_.t_max) return;
    const auto k = static_cast<std::size_t>(std::floor(t / spec_.w));
    if (k < counts_.size()) ++counts_[k];
}

void HistogramBuilder::merge(const HistogramBuilder& other) {
    if (other.counts_.size() != counts_.size()) {
        throw InvalidArgument("merging histograms with different binning");
    }
    for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] += other.counts_[k];
    total_ += other.total_;
}

Histogram HistogramBuilder::finish(std::uint64_t x) const {
    Histogram h;
    h.w = spec_.w;
    h.t_max = spec_.t_max;
    h.x = x;
    h.total_primes = total_;
    h.counts = counts_;
    h.bins.resize(counts_.size(), 0.0);
    if (total_ > 0) {
        const double denom = spec_.w * static_cast<double>(total_);
        for (std::size_t k = 0; k < counts_.size(); ++k) {
            h.bins[k] = static_cast<double>(counts_[k]) / denom;
        }
    }
    return h;
}

HistogramBuilder HistogramBuilder::restore(HistogramSpec spec, std::vector<std::uint64_t> counts,
                                           std::uint64_t total) {
    HistogramBuilder b(spec);
    if (counts.size() != b.counts_.size()) {
        throw InvalidArgument("stored histogram has the wrong number of bins");
    }
    b.counts_ = std::move(counts);
    b.total_ = total;
    return b;
}

Histogram build_histogram(std::span<const OrbitRecord> records, double w, double t_max,
                          std::uint64_t x) {
    HistogramBuilder b(HistogramSpec{w, t_max});
    std::uint64_t largest = 0;
    for (const auto& rec : records) {
        b.add(rec);
        largest = std::max<std::uint64_t>(largest, rec.p);
    }
    return b.finish(x != 0 ? x : largest);
}

Summary summarize(std::string quantity, std::span<const double> values) {
    if (values.empty()) throw InvalidArgument("summary of no values");
    Summary s;
    s.quantity = std::move(quantity);
    const double n = static_cast<double>(values.size());
    double sum = 0.0;
    for (const double v : values) sum += v;
    s.mean = sum / n;
    double sq = 0.0;
    for (const double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / n);
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.min = *lo;
    s.max = *hi;
    return s;
}

DeviationReport deviation_report(std::span<const CheckpointStats> stats) {
    if (stats.empty()) throw InvalidArgument("deviation report needs at least one pair");
    DeviationReport rep;
    rep.x = stats.front().x;
    rep.pairs = stats.size();
    for (const auto& s : stats) {
        if (s.x != rep.x) throw InvalidArgument("deviation report mixes checkpoints");
    }

    static const char* const kNames[kMoments] = {"M1", "M2", "M3", "M4"};
    static const char* const kDistNames[kMoments] = {"|mu1-M1|", "|mu2-M2|", "|mu3-M3|", "|mu4-M4|"};
    std::vector<double> values(stats.size());
    std::vector<double> dist(stats.size());
    for (int r = 1; r <= kMoments; ++r) {
        const double mu = limit_moment(r);
        for (std::size_t i = 0; i < stats.size(); ++i) {
            values[i] = stats[i].M[r - 1];
            dist[i] = std::abs(mu - values[i]);
        }
        rep.moments.push_back(summarize(kNames[r - 1], values));
        rep.moments.push_back(summarize(kDistNames[r - 1], dist));
    }

    for (std::size_t i = 0; i < stats.size(); ++i) values[i] = stats[i].q_scaled;
    rep.q_scaled = summarize("q_scaled", values);
    rep.g_of_x = stats.front().g_of_x;
    rep.g_minus_mean = std::abs(rep.g_of_x - rep.q_scaled.mean);
    return rep;
}

} // namespace orbitlab
