#include "tsga/exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tsga {

ExactSolution brute_force_optimum(const Instance& instance) {
    const std::size_t n = instance.size();
    if (n < 3) throw std::invalid_argument("brute force needs n >= 3");
    if (n > 10) throw std::invalid_argument("brute force refused for n > 10");

    std::vector<City> tail(n - 1);
    std::iota(tail.begin(), tail.end(), City{1});

    std::vector<City> order(n);
    order[0] = 0;
    std::vector<City> best_order;
    double best_length = 0.0;
    bool have_best = false;
    do {
        if (tail.front() > tail.back()) continue;   // direction twin
        std::copy(tail.begin(), tail.end(), order.begin() + 1);
        double length = instance.dist(0, order[1]);
        for (std::size_t i = 1; i + 1 < n; ++i) length += instance.dist(order[i], order[i + 1]);
        length += instance.dist(order[n - 1], 0);
        if (!have_best || length < best_length) {
            best_length = length;
            best_order = order;
            have_best = true;
        }
    } while (std::next_permutation(tail.begin(), tail.end()));

    return ExactSolution{Tour::unchecked(std::move(best_order)), best_length};
}

} // namespace tsga
