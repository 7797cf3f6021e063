#pragma once

#include <cstdint>
#include <vector>

#include "tsga/instance.hpp"
#include "tsga/operators.hpp"
#include "tsga/rng.hpp"
#include "tsga/tour.hpp"

namespace tsga {

/// How step() picks the two parents of each offspring.
enum class ParentSelection {
    /// Both parents uniform from the elite_count() current best (at least
    /// the top two). The aggressive default; reproduces the published
    /// benchmark behavior of the symmetry-exploiting operators.
    ElitePool,
    /// Length-shifted roulette over the whole population; see select_parent.
    ShiftedRoulette,
};

/// How mutation_rate is interpreted when mutating an offspring.
enum class MutationModel {
    /// Every gene position flips a mutation_rate coin and any hit triggers
    /// one inversion, i.e. the offspring mutates with probability
    /// 1 - (1 - mutation_rate)^n. The default; at rate 0.05 and typical n
    /// nearly every offspring receives one inversion.
    GeneFlagInversion,
    /// The offspring mutates (one inversion) with probability mutation_rate.
    PerOffspringInversion,
};

struct GaConfig {
    std::size_t population_size = 100;
    double mutation_rate = 0.05;
    double elitism_fraction = 0.10;
    std::size_t max_generations = 1000;
    CrossoverKind crossover = CrossoverKind::Csrx;
    std::uint64_t seed = 0;
    ParentSelection parent_selection = ParentSelection::ElitePool;
    MutationModel mutation_model = MutationModel::GeneFlagInversion;

    /// floor(elitism_fraction * population_size), the number of individuals
    /// copied unchanged into the next generation.
    std::size_t elite_count() const;

    /// Throws std::invalid_argument on out-of-range parameters or when the
    /// elite count would leave no room for offspring.
    void validate() const;
};

struct Population {
    std::vector<Tour> individuals;
    std::vector<double> lengths;   // lengths[i] == tour_length(individuals[i])
    Tour best_ever;                // best individual seen in any generation
    double best_ever_length;
};

struct GenerationStat {
    std::size_t generation;
    double best_length;
    double mean_length;
};

struct RunRecord {
    std::vector<GenerationStat> per_generation;   // max_generations + 1 rows
    Tour final_best;
    double final_best_length;
    std::uint64_t seed;
};

/// population_size uniformly random tours with cached lengths.
Population init_population(const Instance& instance, const GaConfig& config, Rng& rng);

/// Roulette selection on length-shifted weights: individual i is drawn with
/// probability proportional to (L_max - length_i) + eps, where
/// eps = (L_max - L_min) / population_size + delta. The shift makes raw
/// negated-length fitness usable as a weight; delta keeps the worst
/// individual selectable and degenerates to uniform selection when all
/// lengths are equal. Returns the selected index.
std::size_t select_parent(const Population& population, Rng& rng);

/// One generation: the elite_count() shortest tours are copied unchanged
/// (ties broken by lower index), the rest of the next generation is bred by
/// selecting two parents per config.parent_selection, applying
/// config.crossover (best_ever serves as BOX's global-best reference) and
/// mutating the offspring by inversion per config.mutation_model. Elites are
/// never mutated, so the per-generation best length cannot increase while
/// elite_count() >= 1.
///
/// Randomness is consumed in a fixed order per offspring: parent 1, parent 2,
/// crossover draws, mutation coin, mutation bounds.
Population step(const Instance& instance, const Population& population,
                const GaConfig& config, Rng& rng);

/// Full evolution: init_population followed by max_generations steps,
/// recording best/mean length per generation (generation 0 is the initial
/// population). Deterministic function of (instance, config).
RunRecord run(const Instance& instance, const GaConfig& config);

} // namespace tsga
