// orbit-lab: rho lengths of z^2 + c modulo primes and their statistics.

#include <atomic>
#include <csignal>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "orbitlab/birthday.hpp"
#include "orbitlab/catalog.hpp"
#include "orbitlab/error.hpp"
#include "orbitlab/runner.hpp"

using namespace orbitlab;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitRefusal = 2;
constexpr int kExitIo = 3;

std::atomic<bool> g_interrupted{false};

extern "C" void on_signal(int) { g_interrupted.store(true); }

// "2^25" or a plain integer
std::uint64_t parse_bound(const std::string& text) {
    const auto caret = text.find('^');
    if (caret == std::string::npos) return std::stoull(text);
    const std::uint64_t base = std::stoull(text.substr(0, caret));
    const unsigned exp = static_cast<unsigned>(std::stoul(text.substr(caret + 1)));
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (v > (std::uint64_t{1} << 40)) throw InvalidArgument("bound too large: " + text);
        v *= base;
    }
    return v;
}

// "0.007", or a quotient such as "5.6/800"
double parse_real(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return std::stod(text);
    return std::stod(text.substr(0, slash)) / std::stod(text.substr(slash + 1));
}

void print_summary(const ResultStore& store) {
    std::printf("%s: primes below %llu processed%s\n", store.dir.string().c_str(),
                static_cast<unsigned long long>(store.completed_bound),
                store.complete ? " (complete)" : " (resumable)");
    const auto reports = store.reports();
    if (reports.empty()) return;
    std::printf("%10s %9s %9s %9s %9s %9s %9s\n", "x", "G(x)", "mean", "std", "min", "max", "|G-mean|");
    for (const auto& r : reports) {
        std::printf("%10llu %9.5f %9.5f %9.5f %9.5f %9.5f %9.5f\n", static_cast<unsigned long long>(r.x),
                    r.g_of_x, r.q_scaled.mean, r.q_scaled.stddev, r.q_scaled.min, r.q_scaled.max,
                    r.g_minus_mean);
    }
    std::printf("\nmoments at x = %llu\n", static_cast<unsigned long long>(reports.back().x));
    for (const auto& s : reports.back().moments) {
        std::printf("%-10s %.9f %.9f %.9f %.9f\n", s.quantity.c_str(), s.mean, s.stddev, s.min, s.max);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbit-lab: orbits of z^2 + c modulo primes"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "sweep all primes <= x-max for a grid of seeds");
    std::string c_list = "1,-1,2,3,-3";
    std::string alpha_range = "1..9";
    // no --c / --alpha: default_grid(), which already leaves out the finite-orbit seeds
    std::string x_max_text = "2^25";
    std::string checkpoints_text;
    std::string histogram_text;
    RunConfig config;
    bool drop_ineligible = false;
    auto* c_opt = run_cmd->add_option("--c", c_list, "comma-separated c values (default: the 42-seed grid)");
    auto* alpha_opt = run_cmd->add_option("--alpha", alpha_range, "alpha range lo..hi or list");
    run_cmd->add_flag("--drop-ineligible", drop_ineligible, "silently skip seeds that would be refused");
    run_cmd->add_option("--x-max", x_max_text, "largest prime bound, e.g. 2^25")->capture_default_str();
    run_cmd->add_option("--checkpoints", checkpoints_text, "comma-separated bounds (default 2^10..x-max)");
    run_cmd->add_option("--threads", config.threads, "worker threads")->capture_default_str();
    run_cmd->add_option("--out", config.out_dir, "output directory")->required();
    run_cmd->add_flag("--force", config.force_ineligible, "include ineligible seeds");
    run_cmd->add_flag("--raw-dump", config.raw_dump, "write one row per prime per seed");
    run_cmd->add_option("--histogram", histogram_text, "w,tmax (e.g. 5.6/800,5.6)");
    run_cmd->add_option("--range-size", config.range_size, "integers per scheduled range")->capture_default_str();

    // resume
    auto* resume_cmd = app.add_subcommand("resume", "continue an interrupted run");
    std::string resume_dir;
    unsigned resume_threads = 0;
    resume_cmd->add_option("dir", resume_dir, "run directory or manifest")->required();
    resume_cmd->add_option("--threads", resume_threads, "worker threads (default: as recorded)");

    // export
    auto* export_cmd = app.add_subcommand("export", "write tables from a run directory");
    std::string export_dir;
    std::string format = "csv";
    export_cmd->add_option("dir", export_dir, "run directory")->required();
    export_cmd->add_option("--format", format, "csv or json")->capture_default_str();

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "print exclusion flags for a seed");
    std::int64_t cls_c = 0;
    std::int64_t cls_alpha = 0;
    classify_cmd->add_option("C", cls_c)->required()->allow_extra_args(false);
    classify_cmd->add_option("ALPHA", cls_alpha)->required();

    // birthday
    auto* birthday_cmd = app.add_subcommand("birthday", "exact vs limiting moments of X_n / sqrt n");
    std::uint64_t days = 365;
    std::uint64_t samples = 0;
    std::uint64_t rng_seed = 1;
    birthday_cmd->add_option("--n", days, "number of days")->required();
    birthday_cmd->add_option("--samples", samples, "Monte Carlo samples (0 to skip)");
    birthday_cmd->add_option("--seed", rng_seed, "random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    RunControl control;
    control.interrupt = &g_interrupted;

    try {
        if (*run_cmd) {
            if (c_opt->count() > 0 || alpha_opt->count() > 0) {
                config.grid = make_grid(parse_int_list(c_list), parse_int_range(alpha_range));
            }
            if (drop_ineligible) {
                std::erase_if(config.grid, [](const MapSeed& s) { return !classify(s).zero_hit_eligible(); });
            }
            config.x_max = parse_bound(x_max_text);
            if (!checkpoints_text.empty()) {
                std::string rest = checkpoints_text;
                for (std::size_t pos; !rest.empty();) {
                    pos = rest.find(',');
                    config.checkpoints.push_back(parse_bound(rest.substr(0, pos)));
                    rest = pos == std::string::npos ? "" : rest.substr(pos + 1);
                }
            }
            if (!histogram_text.empty()) {
                const auto comma = histogram_text.find(',');
                if (comma == std::string::npos) throw InvalidArgument("--histogram expects w,tmax");
                config.histogram = HistogramSpec{parse_real(histogram_text.substr(0, comma)),
                                                 parse_real(histogram_text.substr(comma + 1))};
            }
            print_summary(run(config, control));
        } else if (*resume_cmd) {
            std::optional<unsigned> threads;
            if (resume_threads > 0) threads = resume_threads;
            print_summary(resume(resume_dir, threads, {}, control));
        } else if (*export_cmd) {
            const auto fmt = parse_export_format(format);
            for (const auto& path : export_store(load_store(export_dir), fmt)) {
                std::printf("%s\n", path.string().c_str());
            }
        } else if (*classify_cmd) {
            const MapSeed seed{cls_c, cls_alpha};
            const auto f = classify(seed);
            std::printf("%s\n", to_string(seed).c_str());
            std::printf("finite_case_i   %d\nfinite_case_ii  %d\nfinite_case_iii %d\n", f.finite_case_i,
                        f.finite_case_ii, f.finite_case_iii);
            std::printf("excluded_c      %d\nzero_preimage   %d\n", f.excluded_c, f.zero_preimage);
            std::printf("moment_eligible %d\nzero_hit_eligible %d\n", f.moment_eligible(),
                        f.zero_hit_eligible());
        } else if (*birthday_cmd) {
            const BirthdayDistribution dist(days);
            std::printf("n = %llu\n%3s %16s %16s\n", static_cast<unsigned long long>(days), "r", "exact",
                        "limit");
            for (int r = 1; r <= 4; ++r) {
                std::printf("%3d %16.9f %16.9f\n", r, dist.moment(r), limit_moment(r));
            }
            if (samples > 0) {
                std::mt19937_64 rng(rng_seed);
                double sum = 0.0;
                for (std::uint64_t i = 0; i < samples; ++i) {
                    sum += static_cast<double>(sample_collision_time(days, rng));
                }
                std::printf("sampled mean of X_n over %llu draws: %.6f (exact %.6f)\n",
                            static_cast<unsigned long long>(samples), sum / static_cast<double>(samples),
                            dist.moment(1) * std::sqrt(static_cast<double>(days)));
            }
        }
    } catch (const Refusal& e) {
        std::fprintf(stderr, "refused: %s\n", e.what());
        return kExitRefusal;
    } catch (const IoError& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return 0;
}
