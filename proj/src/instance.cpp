#include "tsga/instance.hpp"

#include <cmath>
#include <stdexcept>

namespace tsga {

const char* to_string(MetricKind kind) {
    switch (kind) {
    case MetricKind::ExactEuclidean: return "exact_euclidean";
    case MetricKind::ExactManhattan: return "exact_manhattan";
    case MetricKind::TsplibEuc2d: return "euc_2d";
    case MetricKind::TsplibAtt: return "att";
    }
    return "?";
}

namespace {

double nint(double x) { return std::floor(x + 0.5); }

} // namespace

double point_distance(MetricKind kind, const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    switch (kind) {
    case MetricKind::ExactEuclidean:
        return std::sqrt(dx * dx + dy * dy);
    case MetricKind::ExactManhattan:
        return std::abs(dx) + std::abs(dy);
    case MetricKind::TsplibEuc2d:
        return nint(std::sqrt(dx * dx + dy * dy));
    case MetricKind::TsplibAtt: {
        const double r = std::sqrt((dx * dx + dy * dy) / 10.0);
        const double t = nint(r);
        return t < r ? t + 1.0 : t;
    }
    }
    throw std::logic_error("unknown metric kind");
}

Instance::Instance(std::string name, std::vector<Point> points, MetricKind metric,
                   std::optional<double> known_opt)
    : name_(std::move(name)),
      points_(std::move(points)),
      metric_(metric),
      known_opt_(known_opt) {
    if (points_.empty()) throw std::invalid_argument("instance has no points");
    const std::size_t n = points_.size();
    dist_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        dist_[i * n + i] = 0.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = point_distance(metric_, points_[i], points_[j]);
            dist_[i * n + j] = d;
            dist_[j * n + i] = d;
        }
    }
}

} // namespace tsga
