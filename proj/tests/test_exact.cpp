#include "doctest.h"

#include "tsga/exact.hpp"
#include "tsga/tour.hpp"

#include "support/fixtures.hpp"
#include "support/held_karp.hpp"

using namespace tsga;

TEST_SUITE_BEGIN("exact");

TEST_CASE("unit square") {
    const Instance square = unit_square_instance();
    const ExactSolution solution = brute_force_optimum(square);
    CHECK(solution.length == doctest::Approx(4.0));
    CHECK(equivalent(solution.tour, Tour::identity(4)));
}

TEST_CASE("three cities form a single class") {
    Rng rng(1);
    const Instance instance = random_instance(3, MetricKind::ExactEuclidean, rng);
    const ExactSolution solution = brute_force_optimum(instance);
    CHECK(solution.length == doctest::Approx(tour_length(instance, Tour::identity(3))));
}

TEST_CASE("agrees with the Held-Karp oracle") {
    Rng rng(2);
    for (std::size_t n = 5; n <= 8; ++n) {
        for (int i = 0; i < 5; ++i) {
            const MetricKind kind =
                i % 2 == 0 ? MetricKind::ExactEuclidean : MetricKind::TsplibEuc2d;
            const Instance instance = random_instance(n, kind, rng);
            const ExactSolution solution = brute_force_optimum(instance);
            CHECK(solution.length == doctest::Approx(held_karp_length(instance)));
            CHECK(tour_length(instance, solution.tour) == solution.length);
        }
    }
}

TEST_CASE("guards its enumeration budget") {
    Rng rng(3);
    const Instance big = random_instance(11, MetricKind::ExactEuclidean, rng);
    CHECK_THROWS_AS(brute_force_optimum(big), std::invalid_argument);
}

TEST_SUITE_END();
