#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "tsga/instance.hpp"
#include "tsga/rng.hpp"
#include "tsga/tsplib.hpp"

#include "paths.hpp"

inline tsga::Instance random_instance(std::size_t n, tsga::MetricKind metric,
                                      tsga::Rng& rng, double scale = 100.0) {
    std::vector<tsga::Point> points(n);
    for (auto& p : points) {
        p.x = rng.uniform_real() * scale;
        p.y = rng.uniform_real() * scale;
    }
    return tsga::Instance("rand" + std::to_string(n), std::move(points), metric);
}

/// n points on a circle; the identity tour traverses the convex polygon and
/// is optimal, which makes crossings measurably worse.
inline tsga::Instance circle_instance(std::size_t n, double radius = 10.0) {
    std::vector<tsga::Point> points(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) /
                             static_cast<double>(n);
        points[i] = {radius * std::cos(angle), radius * std::sin(angle)};
    }
    return tsga::Instance("circle" + std::to_string(n), std::move(points),
                          tsga::MetricKind::ExactEuclidean);
}

inline tsga::Instance unit_square_instance() {
    return tsga::Instance("square", {{0, 0}, {0, 1}, {1, 1}, {1, 0}},
                          tsga::MetricKind::ExactEuclidean);
}

inline const tsga::Instance& fixture_instance(const char* file) {
    static std::map<std::string, tsga::Instance> cache;
    const auto it = cache.find(file);
    if (it != cache.end()) return it->second;
    return cache.emplace(file, tsga::make_instance(tsga::load_instance_file(data_path(file))))
        .first->second;
}
