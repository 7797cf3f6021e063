#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "tsga/bench.hpp"
#include "tsga/exact.hpp"
#include "tsga/ga.hpp"
#include "tsga/tsplib.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;

tsga::Instance load_instance(const std::string& path, const std::string& metric) {
    tsga::RawInstance raw = tsga::load_instance_file(path);
    if (metric == "exact") raw.edge_weight_type = tsga::EdgeWeightType::ExactEuclidean;
    tsga::Instance instance = tsga::make_instance(raw);
    if (metric == "manhattan")
        return tsga::Instance(raw.name, raw.coords, tsga::MetricKind::ExactManhattan);
    return instance;
}

std::string tour_ids(const tsga::Tour& tour) {
    std::string out;
    for (std::size_t i = 0; i < tour.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(tour[i] + 1);
    }
    return out;
}

int run_solve(const std::string& instance_path, const std::string& metric,
              const std::string& crossover, tsga::GaConfig config,
              const std::string& opt_tour_path, const std::string& tour_out) {
    const auto kind = tsga::crossover_from_string(crossover);
    if (!kind) {
        std::cerr << "unknown crossover: '" << crossover << "'\n";
        return kExitUsage;
    }
    config.crossover = *kind;

    tsga::Instance instance = load_instance(instance_path, metric);
    if (!opt_tour_path.empty()) {
        const tsga::OptTour opt = tsga::load_opt_tour_file(opt_tour_path);
        instance.set_known_opt(tour_length(instance, tsga::Tour(opt.order)));
    }

    const tsga::RunRecord record = tsga::run(instance, config);
    std::cout << "instance: " << instance.name() << " (n=" << instance.size()
              << ", metric=" << tsga::to_string(instance.metric()) << ")\n";
    std::cout << "best length: " << record.final_best_length << "\n";
    if (instance.known_opt()) {
        const double opt = *instance.known_opt();
        std::cout << "opt: " << opt << " (delta_rel "
                  << (record.final_best_length - opt) / opt << ")\n";
    }
    std::cout << "tour: " << tour_ids(record.final_best) << "\n";

    if (!tour_out.empty()) {
        std::ofstream out(tour_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write: " + tour_out);
        out << tsga::render_tour(instance.name() + ".tour", record.final_best);
    }
    return kExitOk;
}

int run_verify(const std::string& instance_path, const std::string& tour_path) {
    const tsga::Instance instance = tsga::make_instance(tsga::load_instance_file(instance_path));
    const tsga::OptTour opt = tsga::load_opt_tour_file(tour_path);
    std::cout << tsga::tour_length(instance, tsga::Tour(opt.order)) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genetic-algorithm TSP solver and benchmark harness"};
    app.require_subcommand(1);

    // solve
    std::string instance_path, metric = "file", crossover = "csrx";
    std::string opt_tour_path, tour_out;
    tsga::GaConfig config;
    auto* solve = app.add_subcommand("solve", "Run a single seeded GA on an instance");
    solve->add_option("instance", instance_path, "TSPLIB instance file")->required();
    solve->add_option("--crossover", crossover,
                      "one_point, ox, box, csx, rx or csrx");
    solve->add_option("--pop", config.population_size, "population size");
    solve->add_option("--mutation", config.mutation_rate, "per-offspring mutation rate");
    solve->add_option("--elitism", config.elitism_fraction, "elite fraction");
    solve->add_option("--generations", config.max_generations, "generation count");
    solve->add_option("--seed", config.seed, "random seed");
    solve->add_option("--metric", metric, "file (default), exact or manhattan")
        ->check(CLI::IsMember({"file", "exact", "manhattan"}));
    solve->add_option("--opt-tour", opt_tour_path, "reference tour for delta_rel");
    solve->add_option("--tour-out", tour_out, "write the best tour as a .tour file");

    // bench
    std::string spec_path, out_dir, format, crossovers_arg;
    std::size_t repetitions = 0, jobs = 0;
    std::uint64_t base_seed = 0;
    bool plot = false;
    double confidence = 0.0;
    tsga::GaConfig bench_ga;
    auto* bench = app.add_subcommand("bench", "Run a multi-seed experiment from a spec file");
    bench->add_option("spec", spec_path, "experiment spec file")->required();
    auto* opt_out = bench->add_option("--out", out_dir, "output directory");
    auto* opt_format = bench->add_option("--format", format, "csv or json")
                           ->check(CLI::IsMember({"csv", "json"}));
    auto* opt_plot = bench->add_flag("--plot", plot, "emit the convergence SVG");
    auto* opt_cx = bench->add_option("--crossovers", crossovers_arg, "comma-separated operators");
    auto* opt_reps = bench->add_option("--repetitions", repetitions, "runs per operator");
    auto* opt_seed = bench->add_option("--base-seed", base_seed, "seed of run 0");
    auto* opt_pop = bench->add_option("--pop", bench_ga.population_size, "population size");
    auto* opt_mut = bench->add_option("--mutation", bench_ga.mutation_rate, "mutation rate");
    auto* opt_eli = bench->add_option("--elitism", bench_ga.elitism_fraction, "elite fraction");
    auto* opt_gen = bench->add_option("--generations", bench_ga.max_generations, "generations");
    auto* opt_conf = bench->add_option("--confidence", confidence, "plot band confidence");
    auto* opt_jobs = bench->add_option("--jobs", jobs, "worker threads (0 = auto)");

    // verify
    std::string verify_instance, verify_tour;
    auto* verify = app.add_subcommand("verify", "Print the length of a tour file");
    verify->add_option("instance", verify_instance, "TSPLIB instance file")->required();
    verify->add_option("tour", verify_tour, "TSPLIB .tour file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed())
            return run_solve(instance_path, metric, crossover, config, opt_tour_path, tour_out);
        if (verify->parsed())
            return run_verify(verify_instance, verify_tour);

        tsga::ExperimentSpec spec = tsga::load_spec_file(spec_path);
        if (*opt_out) spec.output_dir = out_dir;
        if (*opt_format) spec.format = format == "csv" ? tsga::OutputFormat::Csv
                                                       : tsga::OutputFormat::Json;
        if (*opt_plot) spec.plot = plot;
        if (*opt_cx) {
            spec.crossovers.clear();
            std::istringstream items(crossovers_arg);
            std::string item;
            while (std::getline(items, item, ',')) {
                const auto kind = tsga::crossover_from_string(item);
                if (!kind) {
                    std::cerr << "unknown crossover: '" << item << "'\n";
                    return kExitUsage;
                }
                spec.crossovers.push_back(*kind);
            }
        }
        if (*opt_reps) spec.repetitions = repetitions;
        if (*opt_seed) spec.base_seed = base_seed;
        if (*opt_pop) spec.ga.population_size = bench_ga.population_size;
        if (*opt_mut) spec.ga.mutation_rate = bench_ga.mutation_rate;
        if (*opt_eli) spec.ga.elitism_fraction = bench_ga.elitism_fraction;
        if (*opt_gen) spec.ga.max_generations = bench_ga.max_generations;
        if (*opt_conf) spec.confidence = confidence;
        if (*opt_jobs) spec.jobs = jobs;

        const tsga::ExperimentResult result = tsga::run_experiment(spec);
        for (const auto& path : tsga::emit_results(result, spec))
            std::cout << "wrote " << path.string() << "\n";
        for (const auto& aggregate : result.aggregates) {
            std::cout << tsga::to_string(aggregate.crossover) << ": mean "
                      << aggregate.mean_length << " +- " << aggregate.std_length;
            if (aggregate.relative_error)
                std::cout << " (delta_rel " << *aggregate.relative_error * 100.0 << "%)";
            std::cout << "\n";
        }
        return kExitOk;
    } catch (const tsga::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
