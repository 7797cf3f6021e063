#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsga/instance.hpp"
#include "tsga/tour.hpp"

namespace tsga {

/// Input is not a readable TSPLIB file.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input is well-formed TSPLIB but uses a feature this library does not
/// support (EXPLICIT matrices, GEO coordinates, non-TSP problem types, ...).
struct UnsupportedFormatError : ParseError {
    using ParseError::ParseError;
};

enum class EdgeWeightType { Euc2d, Att, ExactEuclidean };

const char* to_string(EdgeWeightType type);

/// A TSPLIB instance as read from disk: header fields plus the coordinate
/// list, before any distance table is built. Node ids are converted to
/// 0-based indices at the file boundary; coords[i] is the file's node i+1.
struct RawInstance {
    std::string name;
    std::size_t dimension = 0;
    EdgeWeightType edge_weight_type = EdgeWeightType::Euc2d;
    std::vector<Point> coords;

    bool operator==(const RawInstance&) const = default;
};

/// An optimal/reference tour from a TSPLIB .opt.tour file, stored 0-based.
struct OptTour {
    std::string instance_name;
    std::vector<City> order;
};

/// Parses a TSPLIB TSP file with NODE_COORD_SECTION. Accepts EUC_2D, ATT
/// and the EXACT_EUCLIDEAN extension; everything else raises
/// UnsupportedFormatError. Requires DIMENSION >= 3 and exactly DIMENSION
/// coordinate rows with node ids 1..DIMENSION.
RawInstance parse_instance(std::istream& in);
RawInstance load_instance_file(const std::filesystem::path& path);

/// Parses a .tour/.opt.tour file: TOUR_SECTION entries (space- or
/// newline-separated), terminated by -1. Node ids must form a permutation
/// of 1..n.
OptTour parse_opt_tour(std::istream& in);
OptTour load_opt_tour_file(const std::filesystem::path& path);

/// Renders a RawInstance back to TSPLIB text. parse_instance(render) is the
/// identity.
std::string render_instance(const RawInstance& raw);

/// Writes a tour as a TSPLIB .tour file (1-based ids, -1 terminator).
std::string render_tour(const std::string& name, const Tour& tour);

/// Builds the evaluated instance; the metric follows edge_weight_type.
Instance make_instance(const RawInstance& raw);

} // namespace tsga
