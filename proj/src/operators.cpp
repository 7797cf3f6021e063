#include "tsga/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsga {

const char* to_string(CrossoverKind kind) {
    switch (kind) {
    case CrossoverKind::OnePoint: return "one_point";
    case CrossoverKind::Ox: return "ox";
    case CrossoverKind::Box: return "box";
    case CrossoverKind::Csx: return "csx";
    case CrossoverKind::Rx: return "rx";
    case CrossoverKind::Csrx: return "csrx";
    }
    return "?";
}

std::optional<CrossoverKind> crossover_from_string(const std::string& name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "one_point" || lower == "one-point" || lower == "onepoint")
        return CrossoverKind::OnePoint;
    if (lower == "ox") return CrossoverKind::Ox;
    if (lower == "box") return CrossoverKind::Box;
    if (lower == "csx") return CrossoverKind::Csx;
    if (lower == "rx") return CrossoverKind::Rx;
    if (lower == "csrx") return CrossoverKind::Csrx;
    return std::nullopt;
}

std::vector<CrossoverKind> all_crossover_kinds() {
    return {CrossoverKind::OnePoint, CrossoverKind::Ox,  CrossoverKind::Box,
            CrossoverKind::Csx,      CrossoverKind::Rx,  CrossoverKind::Csrx};
}

namespace {

void check_parents(const Tour& p1, const Tour& p2, std::size_t split) {
    if (p1.size() != p2.size()) throw std::invalid_argument("parents differ in size");
    if (split >= p1.size()) throw std::out_of_range("split index out of range");
}

// Fitter of two equal-length-permutation candidates: strictly shorter wins,
// exact ties go to the lexicographically smaller order array. The tie rule
// depends only on the candidate pair as a set, which keeps RX/CSRX invariant
// under reversal of the second parent even when both candidates measure the
// same length.
Tour pick_fitter(const Instance& instance, Tour a, Tour b) {
    const double la = tour_length(instance, a);
    const double lb = tour_length(instance, b);
    if (la < lb) return a;
    if (lb < la) return b;
    return a.order() <= b.order() ? a : b;
}

} // namespace

Tour one_point_crossover(const Tour& p1, const Tour& p2, std::size_t split) {
    check_parents(p1, p2, split);
    const std::size_t n = p1.size();
    std::vector<City> order(n);
    std::vector<bool> taken(n, false);
    for (std::size_t i = 0; i <= split; ++i) {
        order[i] = p1[i];
        taken[p1[i]] = true;
    }
    std::size_t pos = split + 1;
    for (std::size_t i = 0; i < n && pos < n; ++i) {
        if (!taken[p2[i]]) order[pos++] = p2[i];
    }
    return Tour::unchecked(std::move(order));
}

Tour ox_crossover(const Tour& p1, const Tour& p2, std::size_t a, std::size_t b) {
    if (p1.size() != p2.size()) throw std::invalid_argument("parents differ in size");
    const std::size_t n = p1.size();
    if (a > b || b >= n) throw std::out_of_range("cut points out of range");
    std::vector<City> order(n);
    std::vector<bool> taken(n, false);
    for (std::size_t i = a; i <= b; ++i) {
        order[i] = p1[i];
        taken[p1[i]] = true;
    }
    std::size_t pos = (b + 1) % n;
    for (std::size_t i = 0; i < n; ++i) {
        const City c = p2[(b + 1 + i) % n];
        if (taken[c]) continue;
        order[pos] = c;
        pos = (pos + 1) % n;
    }
    return Tour::unchecked(std::move(order));
}

Tour box_crossover(const Tour& p1, const Tour& p2, const Tour& best,
                   const std::vector<std::size_t>& splits,
                   const std::vector<SegmentRef>& labels) {
    const std::size_t n = p1.size();
    if (p2.size() != n || best.size() != n)
        throw std::invalid_argument("parents differ in size");
    if (labels.size() != splits.size() + 1)
        throw std::invalid_argument("labels must have one entry per segment");
    for (std::size_t i = 0; i < splits.size(); ++i) {
        if (splits[i] == 0 || splits[i] >= n || (i > 0 && splits[i] <= splits[i - 1]))
            throw std::invalid_argument("splits must be strictly increasing within (0, n)");
    }

    std::vector<City> order;
    order.reserve(n);
    std::vector<bool> used(n, false);
    std::size_t begin = 0;
    for (std::size_t seg = 0; seg < labels.size(); ++seg) {
        const std::size_t end = seg < splits.size() ? splits[seg] : n;
        const Tour& ref = labels[seg] == SegmentRef::P1
                              ? p1
                              : (labels[seg] == SegmentRef::P2 ? p2 : best);
        std::size_t need = end - begin;
        for (std::size_t i = 0; i < n && need > 0; ++i) {
            if (used[ref[i]]) continue;
            order.push_back(ref[i]);
            used[ref[i]] = true;
            --need;
        }
        begin = end;
    }
    return Tour::unchecked(std::move(order));
}

Tour csx_crossover(const Tour& p1, const Tour& p2, std::size_t split) {
    check_parents(p1, p2, split);
    const std::size_t n = p1.size();
    // Unique k with p2[(split + k) mod n] == p1[split]; tours are
    // permutations so the value occurs exactly once.
    const auto& order = p2.order();
    const std::size_t at = static_cast<std::size_t>(
        std::find(order.begin(), order.end(), p1[split]) - order.begin());
    const std::size_t k = (at + n - split) % n;
    return one_point_crossover(p1, circular_shift(p2, k), split);
}

Tour rx_crossover(const Instance& instance, const Tour& p1, const Tour& p2,
                  std::size_t split) {
    return pick_fitter(instance, one_point_crossover(p1, p2, split),
                       one_point_crossover(p1, reversed(p2), split));
}

Tour csrx_crossover(const Instance& instance, const Tour& p1, const Tour& p2,
                    std::size_t split) {
    return pick_fitter(instance, csx_crossover(p1, p2, split),
                       csx_crossover(p1, reversed(p2), split));
}

Tour inversion_mutation(const Tour& tour, std::size_t i, std::size_t j) {
    if (i > j || j >= tour.size()) throw std::out_of_range("inversion bounds out of range");
    std::vector<City> order = tour.order();
    std::reverse(order.begin() + static_cast<std::ptrdiff_t>(i),
                 order.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    return Tour::unchecked(std::move(order));
}

namespace {

Tour random_box_crossover(const Tour& p1, const Tour& p2, const Tour& best, Rng& rng) {
    const std::size_t n = p1.size();
    // Fine-grained cutting: the split count is uniform on the upper half of
    // {1, ..., n-1}. Coarser cuttings keep long runs from a single reference
    // and converge far faster than the published BOX results; this
    // granularity reproduces them.
    const std::size_t lo = (n - 1) / 2;
    const std::size_t count = lo + 1 + rng.uniform_index(n - 1 - lo);
    std::vector<std::size_t> pool(n - 1);
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i + 1;
    for (std::size_t i = 0; i < count; ++i) {
        std::swap(pool[i], pool[i + rng.uniform_index(pool.size() - i)]);
    }
    std::vector<std::size_t> splits(pool.begin(),
                                    pool.begin() + static_cast<std::ptrdiff_t>(count));
    std::sort(splits.begin(), splits.end());
    std::vector<SegmentRef> labels(splits.size() + 1);
    for (auto& label : labels) {
        switch (rng.uniform_index(3)) {
        case 0: label = SegmentRef::P1; break;
        case 1: label = SegmentRef::P2; break;
        default: label = SegmentRef::Best; break;
        }
    }
    return box_crossover(p1, p2, best, splits, labels);
}

} // namespace

Tour apply_crossover(const Instance& instance, CrossoverKind kind, const Tour& p1,
                     const Tour& p2, const Tour& best, Rng& rng) {
    const std::size_t n = p1.size();
    switch (kind) {
    case CrossoverKind::OnePoint:
        return one_point_crossover(p1, p2, rng.uniform_index(n));
    case CrossoverKind::Ox: {
        std::size_t a = rng.uniform_index(n);
        std::size_t b = rng.uniform_index(n);
        if (a > b) std::swap(a, b);
        return ox_crossover(p1, p2, a, b);
    }
    case CrossoverKind::Box:
        return random_box_crossover(p1, p2, best, rng);
    case CrossoverKind::Csx:
        return csx_crossover(p1, p2, rng.uniform_index(n));
    case CrossoverKind::Rx:
        return rx_crossover(instance, p1, p2, rng.uniform_index(n));
    case CrossoverKind::Csrx:
        return csrx_crossover(instance, p1, p2, rng.uniform_index(n));
    }
    throw std::logic_error("unknown crossover kind");
}

} // namespace tsga
