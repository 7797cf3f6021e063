#include "tsga/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "tsga/stats.hpp"

namespace tsga {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Mapper {
    double x_min, x_max, y_min, y_max;

    double x(double v) const {
        const double range = x_max - x_min > 0 ? x_max - x_min : 1.0;
        return kMarginLeft + (v - x_min) / range * (kWidth - kMarginLeft - kMarginRight);
    }
    double y(double v) const {
        const double range = y_max - y_min > 0 ? y_max - y_min : 1.0;
        return kHeight - kMarginBottom -
               (v - y_min) / range * (kHeight - kMarginTop - kMarginBottom);
    }
};

// Round tick spacing to 1/2/5 x 10^k covering roughly `target` intervals.
double nice_step(double range, int target) {
    const double raw = range / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= m * mag) return m * mag;
    }
    return 10.0 * mag;
}

struct Band {
    std::vector<double> mean, lo, hi;
    bool has_band = false;
};

Band summarize_series(const PlotSeries& series, double confidence) {
    Band band;
    const std::size_t runs = series.runs.size();
    if (runs == 0) throw std::invalid_argument("series has no runs");
    const std::size_t len = series.runs.front().size();
    for (const auto& run : series.runs) {
        if (run.size() != len)
            throw std::invalid_argument("series runs differ in length");
    }
    band.mean.resize(len);
    band.lo.resize(len);
    band.hi.resize(len);
    band.has_band = runs >= 2;
    const double t = runs >= 2 ? t_critical(confidence, runs - 1) : 0.0;
    std::vector<double> samples(runs);
    for (std::size_t g = 0; g < len; ++g) {
        for (std::size_t r = 0; r < runs; ++r) samples[r] = series.runs[r][g];
        const SummaryStats stats = summarize(samples);
        const double half = band.has_band
                                ? t * stats.stddev / std::sqrt(static_cast<double>(runs))
                                : 0.0;
        band.mean[g] = stats.mean;
        band.lo[g] = stats.mean - half;
        band.hi[g] = stats.mean + half;
    }
    return band;
}

} // namespace

std::string render_convergence_svg(const std::vector<PlotSeries>& series,
                                   double confidence, const std::string& title) {
    if (series.empty()) throw std::invalid_argument("nothing to plot");

    std::vector<Band> bands;
    bands.reserve(series.size());
    std::size_t len = 0;
    double y_min = 0.0, y_max = 0.0;
    bool first = true;
    for (const auto& s : series) {
        bands.push_back(summarize_series(s, confidence));
        len = std::max(len, bands.back().mean.size());
        for (std::size_t g = 0; g < bands.back().mean.size(); ++g) {
            const double lo = bands.back().lo[g];
            const double hi = bands.back().hi[g];
            if (first) {
                y_min = lo;
                y_max = hi;
                first = false;
            } else {
                y_min = std::min(y_min, lo);
                y_max = std::max(y_max, hi);
            }
        }
    }
    if (y_max == y_min) {
        y_min -= 1.0;
        y_max += 1.0;
    } else {
        const double pad = 0.04 * (y_max - y_min);
        y_min -= pad;
        y_max += pad;
    }
    const Mapper map{0.0, static_cast<double>(len - 1), y_min, y_max};

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight
        << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n";

    // Axes and ticks.
    const double x0 = kMarginLeft, x1 = kWidth - kMarginRight;
    const double y0 = kHeight - kMarginBottom, y1 = kMarginTop;
    const double x_step = nice_step(static_cast<double>(len - 1), 8);
    for (double v = 0.0; v <= static_cast<double>(len - 1) + 1e-9; v += x_step) {
        const double px = map.x(v);
        svg << "<line x1=\"" << fmt(px) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(px)
            << "\" y2=\"" << fmt(y1) << "\" stroke=\"#e0e0e0\"/>\n";
        svg << "<text x=\"" << fmt(px) << "\" y=\"" << fmt(y0 + 18)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << fmt(v) << "</text>\n";
    }
    const double y_step = nice_step(y_max - y_min, 6);
    for (double v = std::ceil(y_min / y_step) * y_step; v <= y_max + 1e-9; v += y_step) {
        const double py = map.y(v);
        svg << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(py) << "\" x2=\"" << fmt(x1)
            << "\" y2=\"" << fmt(py) << "\" stroke=\"#e0e0e0\"/>\n";
        svg << "<text x=\"" << fmt(x0 - 8) << "\" y=\"" << fmt(py + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << fmt(v) << "</text>\n";
    }
    svg << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x1)
        << "\" y2=\"" << fmt(y0) << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x0)
        << "\" y2=\"" << fmt(y1) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fmt((x0 + x1) / 2) << "\" y=\"" << fmt(kHeight - 12)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << "generation</text>\n";
    svg << "<text x=\"16\" y=\"" << fmt((y0 + y1) / 2) << "\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 16 "
        << fmt((y0 + y1) / 2) << ")\">best tour length</text>\n";

    // Bands under lines.
    for (std::size_t s = 0; s < series.size(); ++s) {
        if (!bands[s].has_band) continue;
        const char* color = kPalette[s % std::size(kPalette)];
        svg << "<polygon fill=\"" << color << "\" fill-opacity=\"0.15\" stroke=\"none\" points=\"";
        for (std::size_t g = 0; g < bands[s].hi.size(); ++g)
            svg << fmt(map.x(static_cast<double>(g))) << "," << fmt(map.y(bands[s].hi[g])) << " ";
        for (std::size_t g = bands[s].lo.size(); g-- > 0;)
            svg << fmt(map.x(static_cast<double>(g))) << "," << fmt(map.y(bands[s].lo[g])) << " ";
        svg << "\"/>\n";
    }
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % std::size(kPalette)];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t g = 0; g < bands[s].mean.size(); ++g)
            svg << fmt(map.x(static_cast<double>(g))) << "," << fmt(map.y(bands[s].mean[g])) << " ";
        svg << "\"/>\n";
    }

    // Legend.
    double ly = y1 + 10;
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % std::size(kPalette)];
        svg << "<line x1=\"" << fmt(x1 - 150) << "\" y1=\"" << fmt(ly) << "\" x2=\""
            << fmt(x1 - 120) << "\" y2=\"" << fmt(ly) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << fmt(x1 - 112) << "\" y=\"" << fmt(ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << series[s].label
            << "</text>\n";
        ly += 18;
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace tsga
