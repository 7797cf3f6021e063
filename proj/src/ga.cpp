#include "tsga/ga.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tsga {

namespace {

// Keeps the worst individual selectable and the selection well defined when
// every length is identical.
constexpr double kSelectionDelta = 1e-9;

} // namespace

std::size_t GaConfig::elite_count() const {
    return static_cast<std::size_t>(
        std::floor(elitism_fraction * static_cast<double>(population_size)));
}

void GaConfig::validate() const {
    if (population_size < 2)
        throw std::invalid_argument("population_size must be at least 2");
    if (mutation_rate < 0.0 || mutation_rate > 1.0)
        throw std::invalid_argument("mutation_rate must be in [0, 1]");
    if (elitism_fraction < 0.0 || elitism_fraction > 1.0)
        throw std::invalid_argument("elitism_fraction must be in [0, 1]");
    if (elite_count() >= population_size)
        throw std::invalid_argument("elitism leaves no room for offspring");
}

Population init_population(const Instance& instance, const GaConfig& config, Rng& rng) {
    config.validate();
    std::vector<Tour> individuals;
    individuals.reserve(config.population_size);
    std::vector<double> lengths;
    lengths.reserve(config.population_size);
    for (std::size_t i = 0; i < config.population_size; ++i) {
        individuals.push_back(random_tour(instance.size(), rng));
        lengths.push_back(tour_length(instance, individuals.back()));
    }
    const std::size_t best =
        static_cast<std::size_t>(std::min_element(lengths.begin(), lengths.end()) -
                                 lengths.begin());
    Tour best_tour = individuals[best];
    const double best_length = lengths[best];
    return Population{std::move(individuals), std::move(lengths), std::move(best_tour),
                      best_length};
}

std::size_t select_parent(const Population& population, Rng& rng) {
    const auto& lengths = population.lengths;
    if (lengths.empty()) throw std::invalid_argument("empty population");
    const auto [min_it, max_it] = std::minmax_element(lengths.begin(), lengths.end());
    const double eps =
        (*max_it - *min_it) / static_cast<double>(lengths.size()) + kSelectionDelta;
    double total = 0.0;
    for (double len : lengths) total += (*max_it - len) + eps;
    const double target = rng.uniform_real() * total;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        cumulative += (*max_it - lengths[i]) + eps;
        if (cumulative > target) return i;
    }
    return lengths.size() - 1;   // floating-point slack
}

Population step(const Instance& instance, const Population& population,
                const GaConfig& config, Rng& rng) {
    const std::size_t pop_size = config.population_size;
    if (population.individuals.size() != pop_size)
        throw std::invalid_argument("population size does not match config");

    // Elites: shortest first, ties by lower index.
    std::vector<std::size_t> ranking(pop_size);
    std::iota(ranking.begin(), ranking.end(), std::size_t{0});
    std::stable_sort(ranking.begin(), ranking.end(), [&](std::size_t a, std::size_t b) {
        return population.lengths[a] < population.lengths[b];
    });

    std::vector<Tour> next;
    next.reserve(pop_size);
    std::vector<double> lengths;
    lengths.reserve(pop_size);
    const std::size_t elites = config.elite_count();
    for (std::size_t i = 0; i < elites; ++i) {
        next.push_back(population.individuals[ranking[i]]);
        lengths.push_back(population.lengths[ranking[i]]);
    }

    const std::size_t n = instance.size();
    const std::size_t pool = std::max<std::size_t>(2, elites);
    const double offspring_mutation_prob =
        config.mutation_model == MutationModel::GeneFlagInversion
            ? 1.0 - std::pow(1.0 - config.mutation_rate, static_cast<double>(n))
            : config.mutation_rate;
    const auto pick_parent = [&]() -> const Tour& {
        if (config.parent_selection == ParentSelection::ElitePool) {
            return population.individuals[ranking[rng.uniform_index(pool)]];
        }
        return population.individuals[select_parent(population, rng)];
    };
    while (next.size() < pop_size) {
        const Tour& p1 = pick_parent();
        const Tour& p2 = pick_parent();
        Tour child = apply_crossover(instance, config.crossover, p1, p2,
                                     population.best_ever, rng);
        if (rng.bernoulli(offspring_mutation_prob)) {
            std::size_t i = rng.uniform_index(n);
            std::size_t j = rng.uniform_index(n);
            if (i > j) std::swap(i, j);
            child = inversion_mutation(child, i, j);
        }
        lengths.push_back(tour_length(instance, child));
        next.push_back(std::move(child));
    }

    const std::size_t best =
        static_cast<std::size_t>(std::min_element(lengths.begin(), lengths.end()) -
                                 lengths.begin());
    Tour best_ever = population.best_ever;
    double best_ever_length = population.best_ever_length;
    if (lengths[best] < best_ever_length) {
        best_ever = next[best];
        best_ever_length = lengths[best];
    }
    return Population{std::move(next), std::move(lengths), std::move(best_ever),
                      best_ever_length};
}

RunRecord run(const Instance& instance, const GaConfig& config) {
    config.validate();
    Rng rng(config.seed);
    Population population = init_population(instance, config, rng);

    RunRecord record;
    record.seed = config.seed;
    record.per_generation.reserve(config.max_generations + 1);
    const auto observe = [&](std::size_t generation) {
        const double best =
            *std::min_element(population.lengths.begin(), population.lengths.end());
        const double mean =
            std::accumulate(population.lengths.begin(), population.lengths.end(), 0.0) /
            static_cast<double>(population.lengths.size());
        record.per_generation.push_back(GenerationStat{generation, best, mean});
    };

    observe(0);
    for (std::size_t g = 1; g <= config.max_generations; ++g) {
        population = step(instance, population, config, rng);
        observe(g);
    }
    record.final_best = population.best_ever;
    record.final_best_length = population.best_ever_length;
    return record;
}

} // namespace tsga
