#include "orbitlab/runner.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "orbitlab/error.hpp"
#include "orbitlab/orbit.hpp"

namespace orbitlab {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// small helpers

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

void write_atomic(const fs::path& path, const std::string& contents) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << contents;
        out.flush();
        if (!out) throw IoError("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------------------
// config <-> json

json hashed_config_json(const RunConfig& config) {
    json grid = json::array();
    for (const auto& s : config.grid) grid.push_back({s.c, s.alpha});
    json j;
    j["grid"] = grid;
    j["x_max"] = config.x_max;
    j["checkpoints"] = effective_checkpoints(config);
    j["range_size"] = config.range_size;
    j["histogram"] = config.histogram
                         ? json{{"w", config.histogram->w}, {"t_max", config.histogram->t_max}}
                         : json(nullptr);
    j["force_ineligible"] = config.force_ineligible;
    j["raw_dump"] = config.raw_dump;
    return j;
}

RunConfig config_from_json(const json& j) {
    RunConfig c;
    c.grid.clear();
    for (const auto& pair : j.at("grid")) c.grid.push_back({pair.at(0).get<std::int64_t>(), pair.at(1).get<std::int64_t>()});
    c.x_max = j.at("x_max").get<std::uint64_t>();
    c.checkpoints = j.at("checkpoints").get<std::vector<std::uint64_t>>();
    c.range_size = j.at("range_size").get<std::uint64_t>();
    if (!j.at("histogram").is_null()) {
        c.histogram = HistogramSpec{j["histogram"].at("w").get<double>(),
                                    j["histogram"].at("t_max").get<double>()};
    }
    c.force_ineligible = j.at("force_ineligible").get<bool>();
    c.raw_dump = j.at("raw_dump").get<bool>();
    return c;
}

json stats_json(const CheckpointStats& s) {
    return json{{"x", s.x},           {"prime_count", s.prime_count}, {"M", s.M},
                {"q_count", s.q_count}, {"q_scaled", s.q_scaled},     {"g_of_x", s.g_of_x}};
}

CheckpointStats stats_from_json(const json& j) {
    CheckpointStats s;
    s.x = j.at("x").get<std::uint64_t>();
    s.prime_count = j.at("prime_count").get<std::uint64_t>();
    s.M = j.at("M").get<std::array<double, kMoments>>();
    s.q_count = j.at("q_count").get<std::uint64_t>();
    s.q_scaled = j.at("q_scaled").get<double>();
    s.g_of_x = j.at("g_of_x").get<double>();
    return s;
}

// ---------------------------------------------------------------------------
// run state: everything needed to continue bit-for-bit from a range boundary

struct SeedState {
    MomentAccumulator acc;
    std::optional<HistogramBuilder> hist;
    std::uint64_t raw_bytes = 0;
};

struct RunState {
    std::uint64_t completed_bound = 0;
    bool complete = false;
    GAccumulator g;
    std::vector<SeedState> seeds;
    std::vector<CheckpointRow> rows;
};

json accumulator_json(const MomentAccumulator& a) {
    json sums = json::array();
    for (const auto& s : a.power_sums) sums.push_back(s.digits());
    return json{{"power_sums", sums},        {"count", a.count},
                {"q_count", a.q_count},      {"first_prime", a.first_prime},
                {"last_prime", a.last_prime}};
}

MomentAccumulator accumulator_from_json(const json& j) {
    MomentAccumulator a;
    const auto& sums = j.at("power_sums");
    for (int r = 0; r < kMoments; ++r) {
        a.power_sums[r] = ExactSum::from_digits(sums.at(r).get<std::array<std::int64_t, ExactSum::kDigits>>());
    }
    a.count = j.at("count").get<std::uint64_t>();
    a.q_count = j.at("q_count").get<std::uint64_t>();
    a.first_prime = j.at("first_prime").get<std::uint32_t>();
    a.last_prime = j.at("last_prime").get<std::uint32_t>();
    return a;
}

json state_json(const RunState& st) {
    json seeds = json::array();
    for (const auto& s : st.seeds) {
        json e{{"acc", accumulator_json(s.acc)}, {"raw_bytes", s.raw_bytes}};
        if (s.hist) e["hist"] = json{{"counts", s.hist->counts()}, {"total", s.hist->total()}};
        seeds.push_back(std::move(e));
    }
    json rows = json::array();
    for (const auto& r : st.rows) {
        rows.push_back(json{{"c", r.seed.c}, {"alpha", r.seed.alpha}, {"stats", stats_json(r.stats)}});
    }
    return json{{"g", {{"inverse_sqrt_sum", st.g.inverse_sqrt_sum()}, {"last_prime", st.g.last_prime()}}},
                {"seeds", seeds},
                {"rows", rows}};
}

RunState state_from_json(const json& j, const RunConfig& config, std::uint64_t bound, bool complete) {
    RunState st;
    st.completed_bound = bound;
    st.complete = complete;
    st.g = GAccumulator::restore(j.at("g").at("inverse_sqrt_sum").get<double>(),
                                 j.at("g").at("last_prime").get<std::uint32_t>());
    const auto& seeds = j.at("seeds");
    if (seeds.size() != config.grid.size()) throw Refusal("state does not match grid size");
    for (const auto& e : seeds) {
        SeedState s;
        s.acc = accumulator_from_json(e.at("acc"));
        s.raw_bytes = e.at("raw_bytes").get<std::uint64_t>();
        if (config.histogram) {
            s.hist = HistogramBuilder::restore(*config.histogram,
                                               e.at("hist").at("counts").get<std::vector<std::uint64_t>>(),
                                               e.at("hist").at("total").get<std::uint64_t>());
        }
        st.seeds.push_back(std::move(s));
    }
    for (const auto& r : j.at("rows")) {
        st.rows.push_back({{r.at("c").get<std::int64_t>(), r.at("alpha").get<std::int64_t>()},
                           stats_from_json(r.at("stats"))});
    }
    return st;
}

RunState fresh_state(const RunConfig& config) {
    RunState st;
    st.seeds.resize(config.grid.size());
    for (auto& s : st.seeds) {
        if (config.histogram) s.hist.emplace(*config.histogram);
    }
    return st;
}

void write_manifest(const fs::path& dir, const RunConfig& config, const RunState& st) {
    const json state = state_json(st);
    json m;
    m["format_version"] = kStoreFormatVersion;
    m["config"] = hashed_config_json(config);
    m["config_hash"] = config_hash(config);
    m["threads"] = config.threads;
    m["completed_bound"] = st.completed_bound;
    m["complete"] = st.complete;
    m["state"] = state;
    m["state_checksum"] = fnv1a_hex(state.dump());
    write_atomic(dir / store_files::kManifest, m.dump(1) + "\n");
}

struct LoadedStore {
    RunConfig config;
    RunState state;
};

LoadedStore read_manifest(const fs::path& dir) {
    const fs::path path = dir / store_files::kManifest;
    if (!fs::exists(path)) throw IoError("no manifest at " + path.string());
    json m;
    try {
        m = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw Refusal("manifest " + path.string() + " is unreadable (" + e.what() +
                      "); re-run from range [0, x_max]");
    }
    try {
        const int version = m.at("format_version").get<int>();
        if (version != kStoreFormatVersion) {
            throw Refusal("store format version " + std::to_string(version) + " is not supported");
        }
        LoadedStore out;
        out.config = config_from_json(m.at("config"));
        out.config.out_dir = dir;
        out.config.threads = m.value("threads", 1u);
        const std::string stored_hash = m.at("config_hash").get<std::string>();
        if (stored_hash != config_hash(out.config)) {
            throw Refusal("stale config: manifest hash " + stored_hash +
                          " does not match its config (" + config_hash(out.config) + ")");
        }
        const std::uint64_t bound = m.at("completed_bound").get<std::uint64_t>();
        const json& state = m.at("state");
        if (fnv1a_hex(state.dump()) != m.at("state_checksum").get<std::string>()) {
            throw Refusal("corrupted partial accumulators in " + path.string() +
                          "; re-run primes in [0, " + std::to_string(bound) + ")");
        }
        out.state = state_from_json(state, out.config, bound, m.at("complete").get<bool>());
        return out;
    } catch (const json::exception& e) {
        throw Refusal("corrupted manifest " + path.string() + " (" + e.what() +
                      "); re-run from range [0, x_max]");
    }
}

// ---------------------------------------------------------------------------
// output tables

std::string checkpoint_csv(const std::vector<CheckpointRow>& rows) {
    std::string out = std::string(kCheckpointHeader) + "\n";
    for (const auto& r : rows) {
        const auto& s = r.stats;
        out += std::to_string(r.seed.c) + "," + std::to_string(r.seed.alpha) + "," +
               std::to_string(s.x) + "," + std::to_string(s.prime_count);
        for (const double m : s.M) out += "," + format_fixed(m, 12);
        out += "," + std::to_string(s.q_count) + "," + format_fixed(s.q_scaled, 5) + "," +
               format_fixed(s.g_of_x, 5) + "\n";
    }
    return out;
}

std::string moment_table_csv(const DeviationReport& rep) {
    std::string out = "x,quantity,mean,stand_dev,min,max\n";
    for (const auto& s : rep.moments) {
        out += std::to_string(rep.x) + "," + s.quantity + "," + format_fixed(s.mean, 9) + "," +
               format_fixed(s.stddev, 9) + "," + format_fixed(s.min, 9) + "," +
               format_fixed(s.max, 9) + "\n";
    }
    return out;
}

std::string zero_hit_table_csv(const std::vector<DeviationReport>& reps) {
    std::string out = "x,G,mean,stand_dev,min,max,abs_G_minus_mean\n";
    for (const auto& r : reps) {
        const auto& q = r.q_scaled;
        out += std::to_string(r.x) + "," + format_fixed(r.g_of_x, 5) + "," + format_fixed(q.mean, 5) +
               "," + format_fixed(q.stddev, 5) + "," + format_fixed(q.min, 5) + "," +
               format_fixed(q.max, 5) + "," + format_fixed(r.g_minus_mean, 5) + "\n";
    }
    return out;
}

std::string histogram_csv(const Histogram& h) {
    std::string out = "bin_lo,bin_hi,density\n";
    for (std::size_t k = 0; k < h.bins.size(); ++k) {
        const double lo = h.w * static_cast<double>(k);
        out += format_fixed(lo, 9) + "," + format_fixed(lo + h.w, 9) + "," +
               format_fixed(h.bins[k], 9) + "\n";
    }
    return out;
}

json summary_json(const Summary& s) {
    return json{{"quantity", s.quantity}, {"mean", s.mean}, {"stand_dev", s.stddev},
                {"min", s.min},           {"max", s.max}};
}

// ---------------------------------------------------------------------------
// the sweep

struct Unit {
    std::uint64_t lo;
    std::uint64_t hi;
};

// [from, end) split at multiples of range_size and just past each checkpoint.
std::vector<Unit> plan_units(const RunConfig& config, std::uint64_t from, std::uint64_t end) {
    std::set<std::uint64_t> cuts;
    for (std::uint64_t b = config.range_size; b < end; b += config.range_size) cuts.insert(b);
    for (const auto x : effective_checkpoints(config)) {
        if (x + 1 < end) cuts.insert(x + 1);
    }
    cuts.insert(end);
    std::vector<Unit> units;
    std::uint64_t lo = 0;
    for (const auto cut : cuts) {
        if (cut > from) units.push_back({std::max(lo, from), cut});
        lo = cut;
    }
    return units;
}

struct Partial {
    MomentAccumulator acc;
    std::optional<HistogramBuilder> hist;
    std::vector<OrbitRecord> raw;
};

Partial process(const PrimeRange& range, const MapSeed& seed, const RunConfig& config,
                OrbitScratch& scratch) {
    Partial part;
    if (config.histogram) part.hist.emplace(*config.histogram);
    if (config.raw_dump) part.raw.reserve(range.primes.size());
    for (const auto p : range.primes) {
        const OrbitRecord rec = orbit_stats(seed.c, seed.alpha, p, scratch);
        part.acc.add(rec);
        if (part.hist) part.hist->add(rec);
        if (config.raw_dump) part.raw.push_back(rec);
    }
    return part;
}

std::string raw_rows(const std::vector<OrbitRecord>& recs) {
    std::string out;
    for (const auto& r : recs) {
        out += std::to_string(r.p) + "," + std::to_string(r.m) + "," + std::to_string(r.tail) + "," +
               std::to_string(r.cycle) + "," + (r.zero_hit ? "1" : "0") + "\n";
    }
    return out;
}

constexpr const char* kRawHeader = "p,m,tail,cycle,zero_hit\n";

// Cuts raw dumps back to the committed size; anything past it came from an
// interrupted batch.
void prepare_raw_files(const RunConfig& config, RunState& st) {
    if (!config.raw_dump) return;
    for (std::size_t j = 0; j < config.grid.size(); ++j) {
        const fs::path path = config.out_dir / store_files::raw_dump(config.grid[j]);
        auto& bytes = st.seeds[j].raw_bytes;
        if (bytes == 0) {
            write_atomic(path, kRawHeader);
            bytes = std::char_traits<char>::length(kRawHeader);
            continue;
        }
        std::error_code ec;
        const auto size = fs::file_size(path, ec);
        if (ec || size < bytes) {
            throw Refusal("raw dump " + path.string() + " is shorter than recorded; re-run primes in [0, " +
                          std::to_string(st.completed_bound) + ")");
        }
        if (size > bytes) fs::resize_file(path, bytes);
    }
}

void write_outputs(const RunConfig& config, const RunState& st) {
    write_atomic(config.out_dir / store_files::kCheckpoints, checkpoint_csv(st.rows));
}

ResultStore to_store(const RunConfig& config, const RunState& st) {
    ResultStore store;
    store.dir = config.out_dir;
    store.config = config;
    store.config_hash = config_hash(config);
    store.completed_bound = st.completed_bound;
    store.complete = st.complete;
    store.rows = st.rows;
    if (st.complete && config.histogram) {
        for (std::size_t j = 0; j < config.grid.size(); ++j) {
            store.histograms.push_back({config.grid[j], st.seeds[j].hist->finish(config.x_max)});
        }
    }
    return store;
}

ResultStore sweep(const RunConfig& config, RunState st, const RunControl& control) {
    const std::uint64_t end = std::min(config.x_max + 1, kMaxSieveBound);
    if (st.complete) return to_store(config, st);

    prepare_raw_files(config, st);
    const auto checkpoints = effective_checkpoints(config);
    const auto units = plan_units(config, st.completed_bound, end);
    const SegmentedSieve sieve(end);
    const std::size_t n_seeds = config.grid.size();
    const unsigned threads = std::max(1u, config.threads);
    const std::size_t batch_size = std::max<std::size_t>(1, threads);

    std::vector<OrbitScratch> scratch(threads);
    std::vector<std::ofstream> raw_out;
    if (config.raw_dump) {
        for (const auto& seed : config.grid) {
            raw_out.emplace_back(config.out_dir / store_files::raw_dump(seed), std::ios::binary | std::ios::app);
            if (!raw_out.back()) throw IoError("cannot append to raw dump for " + to_string(seed));
        }
    }

    for (std::size_t first = 0; first < units.size(); first += batch_size) {
        const std::size_t last = std::min(units.size(), first + batch_size);
        std::vector<PrimeRange> ranges;
        for (std::size_t u = first; u < last; ++u) ranges.push_back(sieve.range(units[u].lo, units[u].hi));

        // (range, seed) tasks handed out dynamically; results land in fixed slots
        const std::size_t n_tasks = ranges.size() * n_seeds;
        std::vector<Partial> parts(n_tasks);
        std::atomic<std::size_t> next{0};
        auto worker = [&](unsigned w) {
            for (std::size_t t; (t = next.fetch_add(1)) < n_tasks;) {
                parts[t] = process(ranges[t / n_seeds], config.grid[t % n_seeds], config, scratch[w]);
            }
        };
        if (threads == 1) {
            worker(0);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
        }

        // merge strictly in range order
        for (std::size_t i = 0; i < ranges.size(); ++i) {
            st.g.add(ranges[i].primes);
            for (std::size_t j = 0; j < n_seeds; ++j) {
                Partial& part = parts[i * n_seeds + j];
                SeedState& seed = st.seeds[j];
                seed.acc.merge(part.acc);
                if (seed.hist) seed.hist->merge(*part.hist);
                if (config.raw_dump) {
                    const std::string rows = raw_rows(part.raw);
                    raw_out[j] << rows;
                    seed.raw_bytes += rows.size();
                }
            }
            const std::uint64_t x = ranges[i].hi - 1;
            if (std::binary_search(checkpoints.begin(), checkpoints.end(), x)) {
                const double g = st.g.value(x);
                for (std::size_t j = 0; j < n_seeds; ++j) {
                    st.rows.push_back({config.grid[j], checkpoint(st.seeds[j].acc, x, g)});
                }
            }
            st.completed_bound = ranges[i].hi;
        }

        for (auto& out : raw_out) {
            out.flush();
            if (!out) throw IoError("raw dump write failed");
        }
        st.complete = st.completed_bound >= end;
        write_outputs(config, st);
        write_manifest(config.out_dir, config, st);

        const bool stop_requested =
            (control.stop_at_bound && st.completed_bound >= *control.stop_at_bound) ||
            (control.interrupt && control.interrupt->load());
        if (!st.complete && stop_requested) return to_store(config, st);
    }

    ResultStore store = to_store(config, st);
    export_store(store, ExportFormat::csv);
    return store;
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());
    const fs::path probe = dir / ".write_probe";
    {
        std::ofstream out(probe);
        if (!out) throw IoError("output directory " + dir.string() + " is not writable");
    }
    fs::remove(probe, ec);
}

} // namespace

// ---------------------------------------------------------------------------

std::vector<std::uint64_t> default_checkpoints(std::uint64_t x_max) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 1024; x <= x_max; x *= 2) out.push_back(x);
    if (out.empty() || out.back() != x_max) out.push_back(x_max);
    return out;
}

std::vector<std::uint64_t> effective_checkpoints(const RunConfig& config) {
    if (config.checkpoints.empty()) return default_checkpoints(config.x_max);
    auto out = config.checkpoints;
    if (out.back() != config.x_max) out.push_back(config.x_max);
    return out;
}

void validate(const RunConfig& config) {
    if (config.grid.empty()) throw InvalidArgument("empty grid");
    std::set<MapSeed> unique(config.grid.begin(), config.grid.end());
    if (unique.size() != config.grid.size()) throw InvalidArgument("grid has duplicate seeds");
    if (config.x_max < 2 || config.x_max > kMaxSieveBound) {
        throw InvalidArgument("x_max must lie in [2, 2^32], got " + std::to_string(config.x_max));
    }
    if (config.range_size < 2) throw InvalidArgument("range_size must be at least 2");
    std::uint64_t prev = 1;
    for (const auto x : config.checkpoints) {
        if (x <= prev || x > config.x_max) {
            throw InvalidArgument("checkpoints must ascend within [2, x_max]; bad value " + std::to_string(x));
        }
        prev = x;
    }
    if (config.histogram) (void)config.histogram->bin_count();

    if (config.force_ineligible) return;
    std::string refused;
    for (const auto& seed : config.grid) {
        const auto flags = classify(seed);
        if (flags.zero_hit_eligible()) continue;
        refused += "\n  " + to_string(seed) + ":";
        for (const auto& name : flags.triggered()) refused += " " + name;
    }
    if (!refused.empty()) throw Refusal("ineligible seeds (use --force to include them):" + refused);
}

std::string config_hash(const RunConfig& config) {
    return fnv1a_hex(hashed_config_json(config).dump());
}

std::vector<CheckpointStats> ResultStore::rows_at(std::uint64_t x) const {
    std::vector<CheckpointStats> out;
    for (const auto& r : rows) {
        if (r.stats.x == x) out.push_back(r.stats);
    }
    return out;
}

std::vector<DeviationReport> ResultStore::reports() const {
    std::vector<DeviationReport> out;
    for (const auto x : effective_checkpoints(config)) {
        const auto at = rows_at(x);
        if (!at.empty()) out.push_back(deviation_report(at));
    }
    return out;
}

ResultStore run(const RunConfig& config, const RunControl& control) {
    validate(config);
    ensure_dir(config.out_dir);
    if (fs::exists(config.out_dir / store_files::kManifest)) {
        return resume(config.out_dir, config.threads, config, control);
    }
    return sweep(config, fresh_state(config), control);
}

ResultStore resume(const fs::path& where, std::optional<unsigned> threads,
                   const std::optional<RunConfig>& expected, const RunControl& control) {
    const fs::path dir = where.filename() == store_files::kManifest ? where.parent_path() : where;
    LoadedStore loaded = read_manifest(dir);
    if (expected && config_hash(*expected) != config_hash(loaded.config)) {
        throw Refusal("stale config: store in " + dir.string() + " was produced by a different configuration (" +
                      config_hash(loaded.config) + " vs " + config_hash(*expected) + ")");
    }
    if (threads) loaded.config.threads = *threads;
    ensure_dir(dir);
    return sweep(loaded.config, std::move(loaded.state), control);
}

ResultStore load_store(const fs::path& where) {
    const fs::path dir = where.filename() == store_files::kManifest ? where.parent_path() : where;
    LoadedStore loaded = read_manifest(dir);
    return to_store(loaded.config, loaded.state);
}

ExportFormat parse_export_format(std::string_view name) {
    if (name == "csv") return ExportFormat::csv;
    if (name == "json") return ExportFormat::json;
    throw InvalidArgument("unknown export format '" + std::string(name) + "' (expected csv or json)");
}

std::vector<fs::path> export_store(const ResultStore& store, ExportFormat format) {
    std::vector<fs::path> written;
    const auto reports = store.reports();

    if (format == ExportFormat::csv) {
        auto put = [&](const fs::path& name, const std::string& body) {
            write_atomic(store.dir / name, body);
            written.push_back(store.dir / name);
        };
        put(store_files::kCheckpoints, checkpoint_csv(store.rows));
        if (!reports.empty()) {
            put(store_files::kMomentTable, moment_table_csv(reports.back()));
            put(store_files::kZeroHitTable, zero_hit_table_csv(reports));
        }
        for (const auto& h : store.histograms) put(store_files::histogram(h.seed), histogram_csv(h.histogram));
        return written;
    }

    json pairs = json::array();
    for (const auto& seed : store.config.grid) {
        json rows = json::array();
        for (const auto& r : store.rows) {
            if (r.seed == seed) rows.push_back(stats_json(r.stats));
        }
        pairs.push_back(json{{"c", seed.c}, {"alpha", seed.alpha}, {"checkpoints", rows}});
    }
    json moment_rows = json::array();
    json zero_hit_rows = json::array();
    for (const auto& rep : reports) {
        json moments = json::array();
        for (const auto& s : rep.moments) moments.push_back(summary_json(s));
        moment_rows.push_back(json{{"x", rep.x}, {"rows", moments}});
        json q = summary_json(rep.q_scaled);
        q["x"] = rep.x;
        q["G"] = rep.g_of_x;
        q["abs_G_minus_mean"] = rep.g_minus_mean;
        zero_hit_rows.push_back(q);
    }
    json hists = json::array();
    for (const auto& h : store.histograms) {
        hists.push_back(json{{"c", h.seed.c},
                             {"alpha", h.seed.alpha},
                             {"w", h.histogram.w},
                             {"t_max", h.histogram.t_max},
                             {"x", h.histogram.x},
                             {"total_primes", h.histogram.total_primes},
                             {"density", h.histogram.bins}});
    }
    json doc{{"format_version", store.format_version},
             {"config_hash", store.config_hash},
             {"config", hashed_config_json(store.config)},
             {"completed_bound", store.completed_bound},
             {"complete", store.complete},
             {"pairs", pairs},
             {"moment_tables", moment_rows},
             {"zero_hit_table", zero_hit_rows},
             {"histograms", hists}};
    write_atomic(store.dir / store_files::kJson, doc.dump(1) + "\n");
    written.push_back(store.dir / store_files::kJson);
    return written;
}

namespace store_files {
std::string raw_dump(const MapSeed& seed) {
    return "raw_c" + std::to_string(seed.c) + "_alpha" + std::to_string(seed.alpha) + ".csv";
}
std::string histogram(const MapSeed& seed) {
    return "histogram_c" + std::to_string(seed.c) + "_alpha" + std::to_string(seed.alpha) + ".csv";
}
} // namespace store_files

} // namespace orbitlab
