#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsga/instance.hpp"
#include "tsga/rng.hpp"
#include "tsga/tour.hpp"

namespace tsga {

enum class CrossoverKind { OnePoint, Ox, Box, Csx, Rx, Csrx };

const char* to_string(CrossoverKind kind);
std::optional<CrossoverKind> crossover_from_string(const std::string& name);
std::vector<CrossoverKind> all_crossover_kinds();

/// Keeps the prefix p1[0..split] (inclusive) and fills the remaining
/// positions with the missing cities in their order of appearance in p2.
/// Requires tours of equal size and split < n.
Tour one_point_crossover(const Tour& p1, const Tour& p2, std::size_t split);

/// Order crossover: copies p1[a..b] in place, then fills the open positions
/// cyclically after b with the missing cities in order of appearance in p2,
/// scanning p2 cyclically from b+1. Requires a <= b < n.
Tour ox_crossover(const Tour& p1, const Tour& p2, std::size_t a, std::size_t b);

/// Which reference individual orders a BOX segment.
enum class SegmentRef { P1, P2, Best };

/// Best-order crossover: the split indices cut the tour positions into
/// consecutive segments, and each segment is filled with the next cities not
/// yet placed, taken in the order they appear in the segment's reference
/// individual (first parent, second parent, or the global best). With every
/// segment labeled P1 the offspring is p1 itself; foreign labels transplant
/// sub-paths of the other references. splits must be strictly increasing
/// within (0, n); labels has one entry per segment, i.e. splits.size() + 1.
Tour box_crossover(const Tour& p1, const Tour& p2, const Tour& best,
                   const std::vector<std::size_t>& splits,
                   const std::vector<SegmentRef>& labels);

/// Circular-shift crossover: shifts p2 so the parents agree at the split
/// index, then applies the one-point crossover. Invariant under circular
/// shifts of p2.
Tour csx_crossover(const Tour& p1, const Tour& p2, std::size_t split);

/// Reversal crossover: the fitter of one_point(p1, p2, s) and
/// one_point(p1, reversed(p2), s). Invariant under reversal of p2.
Tour rx_crossover(const Instance& instance, const Tour& p1, const Tour& p2,
                  std::size_t split);

/// CSX tried against p2 and reversed(p2), keeping the fitter offspring.
/// Invariant under circular shifts and reversal of p2, so it acts on the
/// equivalence classes of the tour space.
Tour csrx_crossover(const Instance& instance, const Tour& p1, const Tour& p2,
                    std::size_t split);

/// Reverses the sub-sequence order[i..j] (inclusive). Requires i <= j < n.
Tour inversion_mutation(const Tour& tour, std::size_t i, std::size_t j);

/// GA-facing dispatch: draws the operator's randomness from rng and applies
/// it. One-point/CSX/RX/CSRX draw one split index; OX draws two cut points
/// (ordered by swapping); BOX draws its split count (uniform on the upper
/// half of {1, ..., n-1}), split positions (without replacement) and
/// per-segment labels (uniform over P1/P2/Best), with `best` as the Best
/// reference.
Tour apply_crossover(const Instance& instance, CrossoverKind kind, const Tour& p1,
                     const Tour& p2, const Tour& best, Rng& rng);

} // namespace tsga
