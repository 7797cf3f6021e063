#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tsga/ga.hpp"
#include "tsga/instance.hpp"
#include "tsga/operators.hpp"

namespace tsga {

enum class OutputFormat { Csv, Json };

/// A batch experiment: one instance, a set of crossover operators, and
/// `repetitions` seeded runs per operator (seeds base_seed + 0, 1, ...).
struct ExperimentSpec {
    std::filesystem::path instance_path;
    std::optional<std::filesystem::path> opt_tour_path;   // source of the OPT reference
    std::optional<double> opt_value;                      // explicit OPT override
    std::vector<CrossoverKind> crossovers{CrossoverKind::Csrx, CrossoverKind::Box};
    std::size_t repetitions = 10;
    std::uint64_t base_seed = 1;
    GaConfig ga;                       // crossover and seed are set per run
    std::filesystem::path output_dir = "results";
    OutputFormat format = OutputFormat::Csv;
    bool plot = false;
    double confidence = 0.95;
    std::size_t jobs = 0;              // worker threads; 0 = hardware default

    void validate() const;
};

/// Reads a flat key = value spec file ('#' starts a comment). Keys:
/// instance, opt_tour, opt, crossovers (comma-separated), repetitions,
/// base_seed, population, mutation, elitism, generations, out, format,
/// plot, confidence, jobs.
ExperimentSpec load_spec_file(const std::filesystem::path& path);

struct AggregateResult {
    CrossoverKind crossover;
    double mean_length = 0.0;
    double std_length = 0.0;                 // sample standard deviation
    std::optional<double> opt;
    std::optional<double> relative_error;    // (mean_length - opt) / opt
};

struct OperatorRuns {
    CrossoverKind crossover;
    std::vector<RunRecord> runs;             // in run-index (seed) order
};

struct ExperimentResult {
    std::string instance_name;
    std::optional<double> opt;
    std::vector<OperatorRuns> runs;
    std::vector<AggregateResult> aggregates;
};

/// Executes every (crossover, seed) run of the experiment on a worker pool
/// and aggregates final best lengths. Runs are independent and collected in
/// run-index order, so the result is a deterministic function of the spec.
ExperimentResult run_experiment(const Instance& instance, const ExperimentSpec& spec);

/// Convenience overload that loads the instance (and the OPT reference, when
/// configured) from spec.instance_path.
ExperimentResult run_experiment(const ExperimentSpec& spec);

std::string summary_csv(const ExperimentResult& result);
std::string summary_json(const ExperimentResult& result);
std::string trace_csv(const RunRecord& record);

/// Writes the summary (per spec.format), one trace file per run and, when
/// spec.plot is set, the convergence SVG into spec.output_dir. Returns the
/// list of files written.
std::vector<std::filesystem::path> emit_results(const ExperimentResult& result,
                                                const ExperimentSpec& spec);

} // namespace tsga
