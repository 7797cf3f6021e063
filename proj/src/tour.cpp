#include "tsga/tour.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tsga {

Tour::Tour(std::vector<City> order) : order_(std::move(order)) {
    const std::size_t n = order_.size();
    std::vector<bool> seen(n, false);
    for (City c : order_) {
        if (c >= n || seen[c]) throw std::invalid_argument("tour is not a permutation");
        seen[c] = true;
    }
}

Tour Tour::identity(std::size_t n) {
    std::vector<City> order(n);
    std::iota(order.begin(), order.end(), City{0});
    return unchecked(std::move(order));
}

Tour Tour::unchecked(std::vector<City> order) {
    Tour t;
    t.order_ = std::move(order);
    return t;
}

double tour_length(const Instance& instance, const Tour& tour) {
    const std::size_t n = tour.size();
    if (n != instance.size()) throw std::invalid_argument("tour size does not match instance");
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) total += instance.dist(tour[i], tour[i + 1]);
    total += instance.dist(tour[n - 1], tour[0]);
    return total;
}

double fitness(const Instance& instance, const Tour& tour) {
    return -tour_length(instance, tour);
}

Tour circular_shift(const Tour& tour, std::size_t k) {
    const std::size_t n = tour.size();
    if (k >= n) throw std::out_of_range("shift amount out of range");
    std::vector<City> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = tour[(i + k) % n];
    return Tour::unchecked(std::move(order));
}

Tour reversed(const Tour& tour) {
    std::vector<City> order(tour.order().rbegin(), tour.order().rend());
    return Tour::unchecked(std::move(order));
}

CanonicalTour canonicalize(const Tour& tour) {
    const std::size_t n = tour.size();
    if (n < 3) throw std::invalid_argument("canonical form needs n >= 3");
    const auto& in = tour.order();
    const std::size_t zero_pos =
        static_cast<std::size_t>(std::find(in.begin(), in.end(), City{0}) - in.begin());
    std::vector<City> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = in[(i + zero_pos) % n];
    // Fixing the direction: reversing the tail keeps city 0 in front and is
    // the same class member as reversing the whole tour and re-rotating.
    if (order[1] > order[n - 1]) std::reverse(order.begin() + 1, order.end());
    return CanonicalTour(Tour::unchecked(std::move(order)));
}

bool equivalent(const Tour& a, const Tour& b) {
    if (a.size() != b.size()) throw std::invalid_argument("tours differ in size");
    return canonicalize(a) == canonicalize(b);
}

Tour random_tour(std::size_t n, Rng& rng) {
    if (n < 3) throw std::invalid_argument("random_tour needs n >= 3");
    std::vector<City> order(n);
    std::iota(order.begin(), order.end(), City{0});
    rng.shuffle(order);
    return Tour::unchecked(std::move(order));
}

} // namespace tsga
