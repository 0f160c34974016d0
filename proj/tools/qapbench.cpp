/// qapbench: benchmark driver for the bfoqap solvers.
///
/// `solve` runs a solver for a number of independent eras (replicates) on
/// one instance and writes a CSV report plus per-era trace or front files;
/// `front` prints the exact Pareto front of a small multiobjective
/// instance by exhaustive enumeration.
///
/// Exit codes: 0 success, 1 requested verification failed, 2 usage or
/// input errors.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "bfoqap/bfo.hpp"
#include "bfoqap/io.hpp"
#include "bfoqap/mobfo.hpp"
#include "bfoqap/pareto.hpp"
#include "bfoqap/rng.hpp"

namespace {

using namespace bfoqap;

struct SolveOptions {
    std::string instance_path;
    std::string solver = "bfo";
    BfoConfig core;
    std::string mutation_name = "swap";
    long long tabu_iters = -1;
    long long pls_budget = 0;
    std::uint64_t archive_capacity = 0;  // 0 = unbounded
    std::string out_dir;
    std::string reference_front_path;
    Cost verify_optimum = 0;
    bool has_verify_optimum = false;
    int workers = 1;
};

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
}

/// Runs body(0) .. body(eras-1), at most `workers` at a time. Results must
/// be written to era-indexed slots; nothing here depends on finish order.
template <typename Body>
void for_each_era(int eras, int workers, Body&& body) {
    workers = std::min(workers, eras);
    if (workers <= 1) {
        for (int k = 0; k < eras; ++k) body(k);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (!stop.load()) {
                const int k = next.fetch_add(1);
                if (k >= eras) return;
                try {
                    body(k);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    stop.store(true);
                    return;
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

/// Era k of a batch runs with seed derive_seed(base, k), except that a
/// single-era batch passes the base seed through unchanged; that makes any
/// report row replayable via --eras 1 --seed <its seed column>.
std::uint64_t era_seed(std::uint64_t base, int era, int eras) {
    if (eras == 1) return base;
    return RandomSource::derive_seed(base, static_cast<std::uint64_t>(era));
}

struct Summary {
    double best = 0.0;
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation (n - 1); 0 for one value
};

Summary summarize(const std::vector<double>& values) {
    Summary s;
    s.best = *std::min_element(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return s;
}

std::string trace_to_string(const std::vector<TracePoint>& trace) {
    std::string out;
    for (const TracePoint& p : trace) {
        out += std::to_string(p.evaluations);
        out += ' ';
        out += std::to_string(p.best_cost);
        out += '\n';
    }
    return out;
}

int run_single_objective(const SolveOptions& opt, const QapInstance& instance,
                         const std::string& name) {
    if (!opt.reference_front_path.empty()) {
        std::cerr << "error: --reference-front applies to multiobjective solvers only\n";
        return 2;
    }
    BfoConfig config = opt.core;
    config.mutation = parse_mutation_kind(opt.mutation_name);
    config.tabu.max_iters = opt.tabu_iters;

    const int eras = config.eras;
    std::vector<RunReport> reports(static_cast<std::size_t>(eras), RunReport{});
    const bool baseline = opt.solver == "bfo-baseline";
    for_each_era(eras, opt.workers, [&](int k) {
        BfoConfig era_config = config;
        era_config.seed = era_seed(config.seed, k, eras);
        reports[static_cast<std::size_t>(k)] =
            baseline ? bfo_baseline_solve(instance, era_config)
                     : bfo_solve(instance, era_config);
    });

    std::cout << "instance " << name << " (n=" << instance.size() << "), solver "
              << opt.solver << ", eras " << eras << ", seed " << config.seed << "\n";
    std::vector<double> costs;
    costs.reserve(reports.size());
    for (int k = 0; k < eras; ++k) {
        const RunReport& r = reports[static_cast<std::size_t>(k)];
        costs.push_back(static_cast<double>(r.best_cost));
        std::cout << "  era " << (k + 1) << "/" << eras << "  seed "
                  << era_seed(config.seed, k, eras) << "  best " << r.best_cost
                  << "  evals " << r.evaluations << "  wall "
                  << format_double(r.wall_ms, 4) << " ms\n";
    }
    const Summary s = summarize(costs);
    const Cost best_cost = static_cast<Cost>(s.best);
    std::cout << "best " << best_cost << "  mean " << format_double(s.mean, 8)
              << "  sd " << format_double(s.sd, 8) << "\n";

    if (!opt.out_dir.empty()) {
        const std::filesystem::path dir(opt.out_dir);
        std::filesystem::create_directories(dir);
        std::string csv = csv_header();
        for (int k = 0; k < eras; ++k) {
            const RunReport& r = reports[static_cast<std::size_t>(k)];
            csv += csv_row(name, k + 1, era_seed(config.seed, k, eras),
                           std::to_string(r.best_cost), r.evaluations, r.wall_ms);
            write_text_file(dir / ("trace_run" + std::to_string(k + 1) + ".txt"),
                            trace_to_string(r.trace));
        }
        write_text_file(dir / "report.csv", csv);
        std::cout << "wrote report.csv and trace_run*.txt to " << dir.string() << "\n";
    }

    if (opt.has_verify_optimum) {
        if (best_cost == opt.verify_optimum) {
            std::cout << "verification: PASS  best matches expected optimum "
                      << opt.verify_optimum << "\n";
            return 0;
        }
        std::cout << "verification: FAIL  expected " << opt.verify_optimum << ", best "
                  << best_cost << "\n";
        return 1;
    }
    return 0;
}

int run_multi_objective(const SolveOptions& opt, const MqapInstance& instance,
                        const std::string& name) {
    if (opt.has_verify_optimum) {
        std::cerr << "error: --verify-optimum applies to single-objective solvers only\n";
        return 2;
    }
    MobfoConfig config;
    config.core = opt.core;
    config.core.mutation = parse_mutation_kind(opt.mutation_name);
    config.pls_budget = opt.pls_budget;
    if (opt.archive_capacity > 0) {
        config.archive_capacity = static_cast<std::size_t>(opt.archive_capacity);
    }

    std::vector<FrontPoint> reference;
    if (!opt.reference_front_path.empty()) {
        reference = parse_front(read_text_file(opt.reference_front_path),
                                instance.objective_count());
        if (reference.empty()) {
            std::cerr << "error: reference front is empty\n";
            return 2;
        }
    }

    const int eras = config.core.eras;
    using EraResult = std::pair<ParetoArchive, MobfoReport>;
    std::vector<std::optional<EraResult>> results(static_cast<std::size_t>(eras));
    const bool baseline = opt.solver == "mobfo-baseline";
    for_each_era(eras, opt.workers, [&](int k) {
        MobfoConfig era_config = config;
        era_config.core.seed = era_seed(config.core.seed, k, eras);
        results[static_cast<std::size_t>(k)] =
            baseline ? mobfo_baseline_solve(instance, era_config)
                     : mobfo_solve(instance, era_config);
    });

    ParetoArchive merged(instance.objective_count());
    for (const auto& result : results) {
        for (const FrontPoint& p : result->first.sorted_members()) {
            merged.insert(p.objectives, p.assignment);
        }
    }

    std::vector<ObjectiveVector> reference_vectors;
    if (!reference.empty()) {
        for (const FrontPoint& p : reference) reference_vectors.push_back(p.objectives);
    } else {
        reference_vectors = merged.objective_vectors();
    }
    const char* gd_label = reference.empty() ? "gd(merged)" : "gd";

    std::cout << "instance " << name << " (n=" << instance.size() << ", m="
              << instance.objective_count() << "), solver " << opt.solver << ", eras "
              << eras << ", seed " << config.core.seed << "\n";
    std::vector<double> gds;
    gds.reserve(results.size());
    for (int k = 0; k < eras; ++k) {
        const EraResult& r = *results[static_cast<std::size_t>(k)];
        const double gd =
            generational_distance(r.first.objective_vectors(), reference_vectors);
        gds.push_back(gd);
        std::cout << "  era " << (k + 1) << "/" << eras << "  seed "
                  << era_seed(config.core.seed, k, eras) << "  front " << r.first.size()
                  << "  evals " << r.second.evaluations << "  wall "
                  << format_double(r.second.wall_ms, 4) << " ms  " << gd_label << " "
                  << format_double(gd) << "\n";
    }
    const Summary s = summarize(gds);
    std::cout << "merged front " << merged.size() << "  " << gd_label << " best "
              << format_double(s.best) << "  mean " << format_double(s.mean, 8) << "\n";

    if (!opt.out_dir.empty()) {
        const std::filesystem::path dir(opt.out_dir);
        std::filesystem::create_directories(dir);
        std::string csv = csv_header();
        for (int k = 0; k < eras; ++k) {
            const EraResult& r = *results[static_cast<std::size_t>(k)];
            const std::string cost_field =
                reference.empty() ? std::string()
                                  : format_double(gds[static_cast<std::size_t>(k)]);
            csv += csv_row(name, k + 1, era_seed(config.core.seed, k, eras), cost_field,
                           r.second.evaluations, r.second.wall_ms);
            write_text_file(dir / ("front_run" + std::to_string(k + 1) + ".txt"),
                            front_to_string(r.first.sorted_members()));
        }
        write_text_file(dir / "report.csv", csv);
        write_text_file(dir / "front_merged.txt", front_to_string(merged.sorted_members()));
        std::cout << "wrote report.csv, front_run*.txt and front_merged.txt to "
                  << dir.string() << "\n";
    }

    if (!reference.empty()) {
        if (s.best == 0.0) {
            std::cout << "verification: PASS  a run reached the reference front exactly\n";
            return 0;
        }
        std::cout << "verification: FAIL  smallest generational distance is "
                  << format_double(s.best) << "\n";
        return 1;
    }
    return 0;
}

int run_solve(const SolveOptions& opt) {
    const LoadedInstance loaded = load_instance_file(opt.instance_path);
    const std::string name = std::filesystem::path(opt.instance_path).stem().string();
    const bool single = opt.solver == "bfo" || opt.solver == "bfo-baseline";
    if (single && loaded.kind != InstanceKind::qap) {
        std::cerr << "error: solver " << opt.solver
                  << " needs a single-objective instance, but " << opt.instance_path
                  << " is multiobjective\n";
        return 2;
    }
    if (!single && loaded.kind != InstanceKind::mqap) {
        std::cerr << "error: solver " << opt.solver
                  << " needs a multiobjective instance, but " << opt.instance_path
                  << " is single-objective\n";
        return 2;
    }
    return single ? run_single_objective(opt, loaded.qap(), name)
                  : run_multi_objective(opt, loaded.mqap(), name);
}

int run_front(const std::string& instance_path, const std::string& out_path) {
    const LoadedInstance loaded = load_instance_file(instance_path);
    if (loaded.kind != InstanceKind::mqap) {
        std::cerr << "error: exhaustive fronts are defined for multiobjective instances\n";
        return 2;
    }
    const std::string text = front_to_string(brute_force_front(loaded.mqap()));
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
        std::cout << "wrote exact front (" << std::count(text.begin(), text.end(), '\n')
                  << " points) to " << out_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QAP / multiobjective QAP benchmark driver"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "qapbench 0.1.0");
    app.set_config("--config", "",
                   "INI file with default option values; keys live in a [solve] or "
                   "[front] section and command-line flags win");

    SolveOptions opt;
    CLI::App* solve = app.add_subcommand("solve", "Run a solver for several eras");
    solve->fallthrough();
    solve->add_option("instance", opt.instance_path, "Instance file (format sniffed)")
        ->required()
        ->check(CLI::ExistingFile);
    solve->add_option("--solver", opt.solver, "Solver variant")
        ->capture_default_str()
        ->check(CLI::IsMember({"bfo", "bfo-baseline", "mobfo", "mobfo-baseline"}));
    solve->add_option("-S,--population", opt.core.population, "Population size (even)")
        ->capture_default_str();
    solve->add_option("--Nc,--chemotactic-steps", opt.core.chemotactic_steps,
                      "Chemotactic steps per reproduction round")
        ->capture_default_str();
    solve->add_option("--Nre,--reproduction-rounds", opt.core.reproduction_rounds,
                      "Reproduction rounds per dispersal round")
        ->capture_default_str();
    solve->add_option("--Ned,--dispersal-rounds", opt.core.dispersal_rounds,
                      "Dispersal rounds")
        ->capture_default_str();
    solve->add_option("--Ped,--dispersal-probability", opt.core.dispersal_probability,
                      "Per-bacterium dispersal probability")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    solve->add_option("--mutation", opt.mutation_name,
                      "Tumble operator (single-objective bfo only)")
        ->capture_default_str()
        ->check(CLI::IsMember({"swap", "p3", "inversion"}));
    solve->add_option("--eras,--era", opt.core.eras, "Independent replicates")
        ->capture_default_str()
        ->check(CLI::Range(1, 1000000));
    solve->add_option("--seed", opt.core.seed, "Base seed; era k uses a derived seed")
        ->capture_default_str();
    solve->add_option("--tabu-iters", opt.tabu_iters,
                      "Tabu iterations per intensification pass (-1: 10 n^2)")
        ->capture_default_str();
    solve->add_option("--pls-budget", opt.pls_budget,
                      "Pareto local search neighbor budget per pass (<=0: 50 n^2)")
        ->capture_default_str();
    solve->add_option("--archive-capacity", opt.archive_capacity,
                      "Pareto archive bound (0: unbounded)")
        ->capture_default_str();
    solve->add_option("--out", opt.out_dir, "Directory for report.csv and per-era files");
    CLI::Option* verify_opt = solve->add_option(
        "--verify-optimum", opt.verify_optimum,
        "Exit 1 unless the best era cost equals this value");
    solve->add_option("--reference-front", opt.reference_front_path,
                      "Front file; exit 1 unless some era matches it exactly")
        ->check(CLI::ExistingFile)
        ->excludes(verify_opt);
    solve->add_option("--workers", opt.workers, "Concurrent eras")
        ->capture_default_str()
        ->check(CLI::Range(1, 256));

    std::string front_instance;
    std::string front_out;
    CLI::App* front = app.add_subcommand(
        "front", "Exact Pareto front of a small multiobjective instance");
    front->fallthrough();
    front->add_option("instance", front_instance, "Instance file")
        ->required()
        ->check(CLI::ExistingFile);
    front->add_option("--out", front_out, "Write the front here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the error message
        return code == 0 ? 0 : 2;
    }

    try {
        opt.has_verify_optimum = verify_opt->count() > 0;
        if (solve->parsed()) return run_solve(opt);
        return run_front(front_instance, front_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
