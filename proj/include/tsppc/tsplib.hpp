#pragma once

#include "tsppc/instance.hpp"
#include "tsppc/tour.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace tsppc {

struct TsplibPointCloud {
    std::string name;
    std::vector<Point> points; // file order
    std::vector<int> ids;      // 1-based ids as written in the file
};

// Reads the TSPLIB subset used here: TYPE TSP, EDGE_WEIGHT_TYPE EUC_2D,
// NODE_COORD_SECTION. Throws ParseError (with line number) on anything
// malformed, missing, or unsupported.
TsplibPointCloud parse_tsplib(std::istream& in);
TsplibPointCloud load_tsplib_file(const std::filesystem::path& path);

// Instance document: TSPLIB-style header and coordinates plus
// DEPOT_SECTION, PRECEDENCE_SECTION (parent child pairs),
// PAYLOAD_SECTION (node commodity q triples) and TSPLIB_ID_SECTION.
// Numbers round-trip exactly; read_instance(write_instance(x)) == x.
void write_instance(const Instance& instance, std::ostream& out);
Instance read_instance(std::istream& in);
void save_instance_file(const Instance& instance, const std::filesystem::path& path);
Instance load_instance_file(const std::filesystem::path& path);

struct TourFile {
    std::string name;
    std::vector<NodeId> order; // internal 0-based node ids
    double cost = 0.0;
    bool has_cost = false;
    std::string metric;
    std::string method;
};

// TOUR-style document with COST / METRIC / METHOD comment lines. Node ids in
// the body are the internal 0-based ids of the instance document.
void write_tour(const Tour& tour, const Instance& instance, const std::string& method,
                std::ostream& out);
TourFile read_tour(std::istream& in);
void save_tour_file(const Tour& tour, const Instance& instance, const std::string& method,
                    const std::filesystem::path& path);
TourFile load_tour_file(const std::filesystem::path& path);

} // namespace tsppc
