#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitlab/catalog.hpp"
#include "orbitlab/primes.hpp"
#include "orbitlab/statistics.hpp"

namespace orbitlab {

inline constexpr int kStoreFormatVersion = 1;

struct RunConfig {
    std::vector<MapSeed> grid = default_grid();
    std::uint64_t x_max = std::uint64_t{1} << 25;
    // Ascending bounds in [2, x_max]; empty means 2^10, 2^11, ..., x_max.
    // x_max is always reported even if omitted here.
    std::vector<std::uint64_t> checkpoints;
    unsigned threads = 1;
    std::filesystem::path out_dir;
    std::optional<HistogramSpec> histogram;
    bool force_ineligible = false;
    bool raw_dump = false;
    // Primes are scheduled in ranges of this many integers.
    std::uint64_t range_size = kSieveBlock;
};

// Powers of two from 2^10 up to x_max, then x_max itself if it is not one.
std::vector<std::uint64_t> default_checkpoints(std::uint64_t x_max);

// Checkpoints actually reported for `config`.
std::vector<std::uint64_t> effective_checkpoints(const RunConfig& config);

// Throws InvalidArgument for malformed configs and Refusal for ineligible
// seeds when force_ineligible is off.
void validate(const RunConfig& config);

// Hex digest over every field that affects results (not threads or out_dir).
std::string config_hash(const RunConfig& config);

struct CheckpointRow {
    MapSeed seed;
    CheckpointStats stats;
};

struct SeedHistogram {
    MapSeed seed;
    Histogram histogram;
};

// Everything a run has produced so far, as recorded in its manifest.
struct ResultStore {
    std::filesystem::path dir;
    RunConfig config;
    std::string config_hash;
    int format_version = kStoreFormatVersion;
    std::uint64_t completed_bound = 0;  // every prime below this is processed
    bool complete = false;
    std::vector<CheckpointRow> rows;           // by x, then grid order
    std::vector<SeedHistogram> histograms;     // filled once complete

    std::vector<CheckpointStats> rows_at(std::uint64_t x) const;
    std::vector<DeviationReport> reports() const;  // one per checkpoint reached
};

// Test and signal hooks. A run stops at the first range boundary at or past
// `stop_at_bound`, or once `interrupt` reads true, leaving a resumable store.
struct RunControl {
    std::optional<std::uint64_t> stop_at_bound;
    const std::atomic<bool>* interrupt = nullptr;
};

// Runs `config` into config.out_dir. An existing store with the same config
// hash is continued; a different hash is refused.
ResultStore run(const RunConfig& config, const RunControl& control = {});

// Continues the store in `dir` (or the directory of a manifest path).
// `expected`, when given, must hash like the stored config.
ResultStore resume(const std::filesystem::path& dir, std::optional<unsigned> threads = {},
                   const std::optional<RunConfig>& expected = {},
                   const RunControl& control = {});

// Reads and verifies a store without running anything.
ResultStore load_store(const std::filesystem::path& dir);

enum class ExportFormat { csv, json };

// Throws InvalidArgument for anything but "csv" or "json".
ExportFormat parse_export_format(std::string_view name);

// Writes the checkpoint table, the two deviation tables and any histograms.
// Returns the files written.
std::vector<std::filesystem::path> export_store(const ResultStore& store, ExportFormat format);

// File names inside a store directory.
namespace store_files {
inline constexpr const char* kManifest = "manifest.json";
inline constexpr const char* kCheckpoints = "checkpoints.csv";
inline constexpr const char* kMomentTable = "moments.csv";
inline constexpr const char* kZeroHitTable = "zero_hits.csv";
inline constexpr const char* kJson = "results.json";
std::string raw_dump(const MapSeed& seed);
std::string histogram(const MapSeed& seed);
} // namespace store_files

inline constexpr const char* kCheckpointHeader =
    "c,alpha,x,prime_count,M1,M2,M3,M4,q_count,q_scaled,g_of_x";

} // namespace orbitlab
