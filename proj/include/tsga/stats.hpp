#pragma once

#include <cstddef>
#include <span>

namespace tsga {

struct SummaryStats {
    double mean = 0.0;
    double stddev = 0.0;   // sample standard deviation (n-1); 0 for size 1
};

SummaryStats summarize(std::span<const double> values);

/// Two-sided Student-t critical value: quantile at 1 - (1-confidence)/2 with
/// the given degrees of freedom.
double t_critical(double confidence, std::size_t degrees_of_freedom);

} // namespace tsga
