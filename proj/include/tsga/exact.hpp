#pragma once

#include "tsga/instance.hpp"
#include "tsga/tour.hpp"

namespace tsga {

struct ExactSolution {
    Tour tour;
    double length;
};

/// Exact minimum of the tour length by enumerating the (n-1)!/2 equivalence
/// classes: city 0 is fixed in front and each direction pair is visited
/// once (order[1] < order[n-1]). Refuses n > 10, where the enumeration
/// stops being a sane test oracle.
ExactSolution brute_force_optimum(const Instance& instance);

} // namespace tsga
