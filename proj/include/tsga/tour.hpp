#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "tsga/instance.hpp"
#include "tsga/rng.hpp"

namespace tsga {

using City = std::uint32_t;

/// A closed tour encoded as a permutation of {0, ..., n-1}. The constructor
/// validates the permutation property, so a Tour value is always a valid
/// genetic encoding.
class Tour {
public:
    /// Empty tour; useful as a placeholder before a real tour is assigned.
    Tour() = default;

    /// Throws std::invalid_argument if order is not a permutation.
    explicit Tour(std::vector<City> order);

    /// Identity tour (0, 1, ..., n-1).
    static Tour identity(std::size_t n);

    /// Skips validation. For operator internals that construct permutations
    /// by filling each slot exactly once.
    static Tour unchecked(std::vector<City> order);

    std::size_t size() const { return order_.size(); }
    City operator[](std::size_t i) const { return order_[i]; }
    const std::vector<City>& order() const { return order_; }

    bool operator==(const Tour&) const = default;
    /// Lexicographic on the order array; used for deterministic tie-breaking.
    std::strong_ordering operator<=>(const Tour&) const = default;

private:
    std::vector<City> order_;
};

/// Closed-tour length including the wrap-around edge.
double tour_length(const Instance& instance, const Tour& tour);

/// GA fitness: negated tour length (shorter tours are fitter).
double fitness(const Instance& instance, const Tour& tour);

/// result[i] = tour[(i + k) mod n]. Requires 0 <= k < n.
Tour circular_shift(const Tour& tour, std::size_t k);

/// result[i] = tour[n - 1 - i].
Tour reversed(const Tour& tour);

/// Unique representative of a tour's equivalence class modulo circular
/// shifts and reversal: city 0 leads, and the direction is fixed by
/// order[1] < order[n-1].
class CanonicalTour {
public:
    const std::vector<City>& order() const { return tour_.order(); }
    const Tour& as_tour() const { return tour_; }

    bool operator==(const CanonicalTour&) const = default;

private:
    friend CanonicalTour canonicalize(const Tour&);
    explicit CanonicalTour(Tour tour) : tour_(std::move(tour)) {}
    Tour tour_;
};

/// Requires n >= 3. canonicalize(a) == canonicalize(b) iff a and b are the
/// same tour modulo circular shifts and reversal.
CanonicalTour canonicalize(const Tour& tour);

/// Tours identified modulo circular shifts and reversal. Requires equal n.
bool equivalent(const Tour& a, const Tour& b);

/// Uniformly random permutation (unbiased shuffle). Requires n >= 3.
Tour random_tour(std::size_t n, Rng& rng);

} // namespace tsga
