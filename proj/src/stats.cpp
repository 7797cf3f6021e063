#include "tsga/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

namespace tsga {

SummaryStats summarize(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("no values to summarize");
    // Summation order is pinned by sorting, so the aggregates do not depend
    // on the order the samples arrive in.
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    double sum = 0.0;
    for (double v : sorted) sum += v;
    const double mean = sum / static_cast<double>(sorted.size());
    if (sorted.size() == 1) return SummaryStats{mean, 0.0};
    double ss = 0.0;
    for (double v : sorted) ss += (v - mean) * (v - mean);
    return SummaryStats{mean, std::sqrt(ss / static_cast<double>(sorted.size() - 1))};
}

double t_critical(double confidence, std::size_t degrees_of_freedom) {
    if (confidence <= 0.0 || confidence >= 1.0)
        throw std::invalid_argument("confidence must be in (0, 1)");
    if (degrees_of_freedom == 0)
        throw std::invalid_argument("degrees of freedom must be positive");
    const boost::math::students_t dist(static_cast<double>(degrees_of_freedom));
    return boost::math::quantile(dist, 1.0 - (1.0 - confidence) / 2.0);
}

} // namespace tsga
