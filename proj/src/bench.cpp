#include "tsga/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "tsga/stats.hpp"
#include "tsga/svg.hpp"
#include "tsga/tsplib.hpp"

namespace tsga {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

bool parse_bool(const std::string& value, const std::string& key) {
    if (value == "true" || value == "yes" || value == "1") return true;
    if (value == "false" || value == "no" || value == "0") return false;
    throw ParseError("spec key '" + key + "' expects a boolean, got '" + value + "'");
}

} // namespace

void ExperimentSpec::validate() const {
    if (instance_path.empty()) throw std::invalid_argument("no instance configured");
    if (crossovers.empty()) throw std::invalid_argument("no crossover operators configured");
    if (repetitions == 0) throw std::invalid_argument("repetitions must be at least 1");
    if (confidence <= 0.0 || confidence >= 1.0)
        throw std::invalid_argument("confidence must be in (0, 1)");
    ga.validate();
}

ExperimentSpec load_spec_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open spec file: " + path.string());

    ExperimentSpec spec;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        auto sep = line.find('=');
        if (sep == std::string::npos) sep = line.find(':');
        if (sep == std::string::npos)
            throw ParseError("spec line " + std::to_string(lineno) + " is not key = value");
        const std::string key = trim(line.substr(0, sep));
        const std::string value = trim(line.substr(sep + 1));
        try {
            if (key == "instance") spec.instance_path = value;
            else if (key == "opt_tour") spec.opt_tour_path = value;
            else if (key == "opt") spec.opt_value = std::stod(value);
            else if (key == "crossovers") {
                spec.crossovers.clear();
                std::istringstream items(value);
                std::string item;
                while (std::getline(items, item, ',')) {
                    item = trim(item);
                    if (item.empty()) continue;
                    const auto kind = crossover_from_string(item);
                    if (!kind) throw ParseError("unknown crossover name: '" + item + "'");
                    spec.crossovers.push_back(*kind);
                }
            } else if (key == "repetitions") spec.repetitions = std::stoul(value);
            else if (key == "base_seed") spec.base_seed = std::stoull(value);
            else if (key == "population") spec.ga.population_size = std::stoul(value);
            else if (key == "mutation") spec.ga.mutation_rate = std::stod(value);
            else if (key == "elitism") spec.ga.elitism_fraction = std::stod(value);
            else if (key == "generations") spec.ga.max_generations = std::stoul(value);
            else if (key == "out") spec.output_dir = value;
            else if (key == "format") {
                if (value == "csv") spec.format = OutputFormat::Csv;
                else if (value == "json") spec.format = OutputFormat::Json;
                else throw ParseError("unknown format: '" + value + "'");
            } else if (key == "plot") spec.plot = parse_bool(value, key);
            else if (key == "confidence") spec.confidence = std::stod(value);
            else if (key == "jobs") spec.jobs = std::stoul(value);
            else throw ParseError("unknown spec key: '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw ParseError("spec line " + std::to_string(lineno) + ": bad value '" +
                             value + "' for key '" + key + "'");
        } catch (const std::out_of_range&) {
            throw ParseError("spec line " + std::to_string(lineno) + ": value out of range");
        }
    }
    return spec;
}

ExperimentResult run_experiment(const Instance& instance, const ExperimentSpec& spec) {
    spec.validate();

    struct Job {
        std::size_t op_index;
        std::size_t run_index;
    };
    std::vector<Job> jobs;
    for (std::size_t op = 0; op < spec.crossovers.size(); ++op)
        for (std::size_t rep = 0; rep < spec.repetitions; ++rep)
            jobs.push_back(Job{op, rep});

    std::vector<std::vector<RunRecord>> records(spec.crossovers.size());
    for (auto& per_op : records) per_op.resize(spec.repetitions);

    std::size_t workers = spec.jobs != 0 ? spec.jobs : std::thread::hardware_concurrency();
    workers = std::max<std::size_t>(1, std::min(workers, jobs.size()));

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t j = next.fetch_add(1); j < jobs.size(); j = next.fetch_add(1)) {
            GaConfig config = spec.ga;
            config.crossover = spec.crossovers[jobs[j].op_index];
            config.seed = spec.base_seed + jobs[j].run_index;
            records[jobs[j].op_index][jobs[j].run_index] = run(instance, config);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    ExperimentResult result;
    result.instance_name = instance.name();
    result.opt = instance.known_opt();
    for (std::size_t op = 0; op < spec.crossovers.size(); ++op) {
        std::vector<double> finals;
        finals.reserve(spec.repetitions);
        for (const auto& record : records[op]) finals.push_back(record.final_best_length);
        const SummaryStats stats = summarize(finals);
        AggregateResult aggregate;
        aggregate.crossover = spec.crossovers[op];
        aggregate.mean_length = stats.mean;
        aggregate.std_length = stats.stddev;
        aggregate.opt = result.opt;
        if (result.opt && *result.opt > 0.0)
            aggregate.relative_error = (stats.mean - *result.opt) / *result.opt;
        result.aggregates.push_back(aggregate);
        result.runs.push_back(OperatorRuns{spec.crossovers[op], std::move(records[op])});
    }
    return result;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    Instance instance = make_instance(load_instance_file(spec.instance_path));
    if (spec.opt_value) {
        instance.set_known_opt(*spec.opt_value);
    } else if (spec.opt_tour_path) {
        const OptTour opt = load_opt_tour_file(*spec.opt_tour_path);
        instance.set_known_opt(tour_length(instance, Tour(opt.order)));
    }
    return run_experiment(instance, spec);
}

std::string summary_csv(const ExperimentResult& result) {
    std::ostringstream out;
    out << "instance,opt,crossover,mean,std,delta_rel\n";
    for (const auto& aggregate : result.aggregates) {
        out << result.instance_name << ",";
        out << (aggregate.opt ? fmt(*aggregate.opt) : "") << ",";
        out << to_string(aggregate.crossover) << ",";
        out << fmt(aggregate.mean_length) << "," << fmt(aggregate.std_length) << ",";
        out << (aggregate.relative_error ? fmt(*aggregate.relative_error) : "") << "\n";
    }
    return out.str();
}

std::string summary_json(const ExperimentResult& result) {
    nlohmann::json doc;
    doc["instance"] = result.instance_name;
    if (result.opt) doc["opt"] = *result.opt;
    doc["results"] = nlohmann::json::array();
    for (const auto& aggregate : result.aggregates) {
        nlohmann::json row;
        row["crossover"] = to_string(aggregate.crossover);
        row["mean"] = aggregate.mean_length;
        row["std"] = aggregate.std_length;
        if (aggregate.relative_error) row["delta_rel"] = *aggregate.relative_error;
        doc["results"].push_back(row);
    }
    return doc.dump(2) + "\n";
}

std::string trace_csv(const RunRecord& record) {
    std::ostringstream out;
    out << "generation,best_length,mean_length\n";
    for (const auto& stat : record.per_generation) {
        out << stat.generation << "," << fmt(stat.best_length) << ","
            << fmt(stat.mean_length) << "\n";
    }
    return out.str();
}

std::vector<std::filesystem::path> emit_results(const ExperimentResult& result,
                                                const ExperimentSpec& spec) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(spec.output_dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory: " + ec.message());

    const auto write_file = [](const fs::path& path, const std::string& content) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write: " + path.string());
        out << content;
        if (!out) throw std::runtime_error("write failed: " + path.string());
    };

    std::vector<fs::path> written;
    const fs::path summary =
        spec.output_dir / (spec.format == OutputFormat::Csv ? "summary.csv" : "summary.json");
    write_file(summary,
               spec.format == OutputFormat::Csv ? summary_csv(result) : summary_json(result));
    written.push_back(summary);

    for (const auto& per_op : result.runs) {
        for (const auto& record : per_op.runs) {
            const fs::path trace =
                spec.output_dir / ("trace_" + result.instance_name + "_" +
                                   to_string(per_op.crossover) + "_seed" +
                                   std::to_string(record.seed) + ".csv");
            write_file(trace, trace_csv(record));
            written.push_back(trace);
        }
    }

    if (spec.plot) {
        std::vector<PlotSeries> series;
        for (const auto& per_op : result.runs) {
            if (per_op.runs.size() < 2) {
                std::cerr << "warning: " << to_string(per_op.crossover)
                          << " has fewer than 2 runs; plotting without a confidence band\n";
            }
            PlotSeries s;
            s.label = to_string(per_op.crossover);
            for (const auto& record : per_op.runs) {
                std::vector<double> best;
                best.reserve(record.per_generation.size());
                for (const auto& stat : record.per_generation) best.push_back(stat.best_length);
                s.runs.push_back(std::move(best));
            }
            series.push_back(std::move(s));
        }
        const fs::path plot = spec.output_dir / ("convergence_" + result.instance_name + ".svg");
        write_file(plot, render_convergence_svg(series, spec.confidence,
                                                result.instance_name + " best tour length"));
        written.push_back(plot);
    }
    return written;
}

} // namespace tsga
