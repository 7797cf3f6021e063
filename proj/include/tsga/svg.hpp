#pragma once

#include <string>
#include <vector>

namespace tsga {

/// One plotted operator: a best-length-per-generation curve for each run.
/// All runs of a series must have equal length (generations + 1 samples).
struct PlotSeries {
    std::string label;
    std::vector<std::vector<double>> runs;
};

/// Renders a self-contained SVG convergence plot: x = generation, y = best
/// tour length, one line per series (mean across its runs) with a shaded
/// mean +- t-based confidence band. Series with fewer than two runs are
/// drawn without a band.
std::string render_convergence_svg(const std::vector<PlotSeries>& series,
                                   double confidence, const std::string& title);

} // namespace tsga
