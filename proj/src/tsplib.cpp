#include "tsga/tsplib.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace tsga {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

// Splits "KEY : value" / "KEY: value" / "KEY:value". Returns false when the
// line has no colon (section names, data rows, EOF).
bool split_header(const std::string& line, std::string& key, std::string& value) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) return false;
    key = trim(line.substr(0, colon));
    value = trim(line.substr(colon + 1));
    return true;
}

std::size_t parse_size(const std::string& value, const char* what) {
    try {
        const long long v = std::stoll(value);
        if (v < 0) throw ParseError(std::string(what) + " is negative");
        return static_cast<std::size_t>(v);
    } catch (const std::invalid_argument&) {
        throw ParseError(std::string("cannot parse ") + what + ": '" + value + "'");
    } catch (const std::out_of_range&) {
        throw ParseError(std::string(what) + " out of range: '" + value + "'");
    }
}

} // namespace

const char* to_string(EdgeWeightType type) {
    switch (type) {
    case EdgeWeightType::Euc2d: return "EUC_2D";
    case EdgeWeightType::Att: return "ATT";
    case EdgeWeightType::ExactEuclidean: return "EXACT_EUCLIDEAN";
    }
    return "?";
}

RawInstance parse_instance(std::istream& in) {
    RawInstance raw;
    bool have_dimension = false;
    bool have_weight_type = false;
    std::string line;

    // Header.
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        if (line == "NODE_COORD_SECTION") break;
        if (line == "EOF") throw ParseError("EOF before NODE_COORD_SECTION");

        std::string key, value;
        if (!split_header(line, key, value)) {
            if (line.ends_with("_SECTION"))
                throw UnsupportedFormatError("unsupported section: " + line);
            throw ParseError("malformed header line: '" + line + "'");
        }
        if (key == "NAME") {
            raw.name = value;
        } else if (key == "TYPE") {
            if (value != "TSP")
                throw UnsupportedFormatError("unsupported problem type: " + value);
        } else if (key == "COMMENT") {
            // ignored
        } else if (key == "DIMENSION") {
            raw.dimension = parse_size(value, "DIMENSION");
            have_dimension = true;
        } else if (key == "EDGE_WEIGHT_TYPE") {
            if (value == "EUC_2D") raw.edge_weight_type = EdgeWeightType::Euc2d;
            else if (value == "ATT") raw.edge_weight_type = EdgeWeightType::Att;
            else if (value == "EXACT_EUCLIDEAN") raw.edge_weight_type = EdgeWeightType::ExactEuclidean;
            else throw UnsupportedFormatError("unsupported EDGE_WEIGHT_TYPE: " + value);
            have_weight_type = true;
        } else if (key == "NODE_COORD_TYPE") {
            if (value != "TWOD_COORDS")
                throw UnsupportedFormatError("unsupported NODE_COORD_TYPE: " + value);
        } else {
            throw ParseError("malformed header keyword: '" + key + "'");
        }
    }
    if (!in && line != "NODE_COORD_SECTION")
        throw ParseError("missing NODE_COORD_SECTION");
    if (!have_dimension) throw ParseError("missing DIMENSION");
    if (!have_weight_type) throw ParseError("missing EDGE_WEIGHT_TYPE");
    if (raw.dimension < 3) throw ParseError("DIMENSION must be at least 3");

    // Coordinate rows: "<id> <x> <y>", ids 1..n in any order, each exactly once.
    raw.coords.resize(raw.dimension);
    std::vector<bool> seen(raw.dimension, false);
    std::size_t count = 0;
    while (count < raw.dimension && std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        if (line == "EOF") break;
        std::istringstream row(line);
        long long id;
        double x, y;
        if (!(row >> id >> x >> y))
            throw ParseError("malformed coordinate row: '" + line + "'");
        if (id < 1 || static_cast<std::size_t>(id) > raw.dimension)
            throw ParseError("node id out of range: " + std::to_string(id));
        const std::size_t idx = static_cast<std::size_t>(id) - 1;
        if (seen[idx]) throw ParseError("duplicate node id: " + std::to_string(id));
        seen[idx] = true;
        raw.coords[idx] = Point{x, y};
        ++count;
    }
    if (count != raw.dimension)
        throw ParseError("coordinate count mismatch: expected " +
                         std::to_string(raw.dimension) + ", got " + std::to_string(count));
    return raw;
}

RawInstance load_instance_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path.string());
    return parse_instance(in);
}

OptTour parse_opt_tour(std::istream& in) {
    OptTour tour;
    std::size_t dimension = 0;
    std::string line;

    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        if (line == "TOUR_SECTION") break;
        if (line == "EOF") throw ParseError("EOF before TOUR_SECTION");

        std::string key, value;
        if (!split_header(line, key, value)) {
            if (line.ends_with("_SECTION"))
                throw UnsupportedFormatError("unsupported section: " + line);
            throw ParseError("malformed header line: '" + line + "'");
        }
        if (key == "NAME") tour.instance_name = value;
        else if (key == "TYPE") {
            if (value != "TOUR") throw UnsupportedFormatError("unsupported type: " + value);
        } else if (key == "COMMENT") {
            // ignored
        } else if (key == "DIMENSION") {
            dimension = parse_size(value, "DIMENSION");
        } else {
            throw ParseError("malformed header keyword: '" + key + "'");
        }
    }
    if (!in) throw ParseError("missing TOUR_SECTION");

    // Entries may be split across lines arbitrarily; -1 terminates.
    std::vector<long long> ids;
    bool terminated = false;
    while (!terminated && (in >> line)) {
        long long id;
        try {
            id = std::stoll(line);
        } catch (const std::exception&) {
            throw ParseError("malformed tour entry: '" + line + "'");
        }
        if (id == -1) {
            terminated = true;
            break;
        }
        ids.push_back(id);
    }
    if (!terminated) throw ParseError("tour missing -1 terminator");
    if (dimension == 0) dimension = ids.size();
    if (ids.size() != dimension)
        throw ParseError("tour length mismatch: expected " + std::to_string(dimension) +
                         ", got " + std::to_string(ids.size()));

    std::vector<bool> seen(dimension, false);
    tour.order.reserve(dimension);
    for (long long id : ids) {
        if (id < 1 || static_cast<std::size_t>(id) > dimension)
            throw ParseError("tour node id out of range: " + std::to_string(id));
        const std::size_t idx = static_cast<std::size_t>(id) - 1;
        if (seen[idx]) throw ParseError("duplicate tour node id: " + std::to_string(id));
        seen[idx] = true;
        tour.order.push_back(static_cast<City>(idx));
    }
    return tour;
}

OptTour load_opt_tour_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open tour file: " + path.string());
    return parse_opt_tour(in);
}

std::string render_instance(const RawInstance& raw) {
    std::ostringstream out;
    out << "NAME : " << raw.name << "\n";
    out << "TYPE : TSP\n";
    out << "DIMENSION : " << raw.dimension << "\n";
    out << "EDGE_WEIGHT_TYPE : " << to_string(raw.edge_weight_type) << "\n";
    out << "NODE_COORD_SECTION\n";
    out.precision(17);
    for (std::size_t i = 0; i < raw.coords.size(); ++i) {
        out << (i + 1) << " " << raw.coords[i].x << " " << raw.coords[i].y << "\n";
    }
    out << "EOF\n";
    return out.str();
}

std::string render_tour(const std::string& name, const Tour& tour) {
    std::ostringstream out;
    out << "NAME : " << name << "\n";
    out << "TYPE : TOUR\n";
    out << "DIMENSION : " << tour.size() << "\n";
    out << "TOUR_SECTION\n";
    for (std::size_t i = 0; i < tour.size(); ++i) out << (tour[i] + 1) << "\n";
    out << "-1\nEOF\n";
    return out.str();
}

Instance make_instance(const RawInstance& raw) {
    MetricKind metric = MetricKind::ExactEuclidean;
    switch (raw.edge_weight_type) {
    case EdgeWeightType::Euc2d: metric = MetricKind::TsplibEuc2d; break;
    case EdgeWeightType::Att: metric = MetricKind::TsplibAtt; break;
    case EdgeWeightType::ExactEuclidean: metric = MetricKind::ExactEuclidean; break;
    }
    return Instance(raw.name, raw.coords, metric);
}

} // namespace tsga
