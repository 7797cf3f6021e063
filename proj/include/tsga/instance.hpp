#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tsga {

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point&) const = default;
};

/// Distance conventions. The TSPLIB kinds reproduce the integer distances
/// used for the library's published optima; the exact kinds keep unrounded
/// reals.
///
/// TsplibEuc2d: nint(sqrt(dx^2 + dy^2)) with nint(x) = floor(x + 0.5).
/// TsplibAtt:   r = sqrt((dx^2 + dy^2) / 10), t = nint(r),
///              d = t + 1 if t < r else t (pseudo-Euclidean, rounds up).
enum class MetricKind {
    ExactEuclidean,
    ExactManhattan,
    TsplibEuc2d,
    TsplibAtt,
};

const char* to_string(MetricKind kind);

/// Single-edge distance under the given convention. Symmetric in a, b.
double point_distance(MetricKind kind, const Point& a, const Point& b);

/// An immutable TSP instance: points, metric and the full n x n distance
/// table. The table is precomputed once so tour evaluation inside the GA
/// loop is pure lookups; at the problem sizes this library targets the
/// quadratic memory is negligible.
class Instance {
public:
    Instance(std::string name, std::vector<Point> points, MetricKind metric,
             std::optional<double> known_opt = std::nullopt);

    const std::string& name() const { return name_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }
    MetricKind metric() const { return metric_; }

    double dist(std::size_t i, std::size_t j) const {
        return dist_[i * points_.size() + j];
    }

    /// Optimal tour length, when known (used for relative-error reporting).
    std::optional<double> known_opt() const { return known_opt_; }
    void set_known_opt(double opt) { known_opt_ = opt; }

private:
    std::string name_;
    std::vector<Point> points_;
    MetricKind metric_;
    std::optional<double> known_opt_;
    std::vector<double> dist_;
};

} // namespace tsga
