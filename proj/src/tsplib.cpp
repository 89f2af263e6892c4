#include "tsppc/tsplib.hpp"

#include "tsppc/errors.hpp"
#include "tsppc/format.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

namespace tsppc {

namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    bool next(std::string& out) {
        if (!std::getline(in, out)) return false;
        ++line_no;
        return true;
    }
};

std::string upper(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

// Splits "KEY : value" / "KEY: value" / bare "KEY"; key is uppercased.
struct HeaderLine {
    std::string key;
    std::string value;
    bool has_colon = false;
};

HeaderLine split_header(std::string_view line) {
    HeaderLine h;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
        h.key = upper(trim(line));
    } else {
        h.has_colon = true;
        h.key = upper(trim(line.substr(0, colon)));
        h.value = std::string(trim(line.substr(colon + 1)));
    }
    return h;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

[[noreturn]] void fail(const std::string& message, int line) { throw ParseError(message, line); }

struct CoordRecord {
    int id;
    Point point;
};

// Reads exactly `count` "id x y" records after NODE_COORD_SECTION.
std::vector<CoordRecord> read_coord_records(LineReader& reader, int count) {
    std::vector<CoordRecord> records;
    records.reserve(static_cast<size_t>(count));
    std::string line;
    std::set<int> seen;
    while (static_cast<int>(records.size()) < count) {
        if (!reader.next(line)) {
            fail("coordinate section ended after " + std::to_string(records.size()) +
                     " of " + std::to_string(count) + " records (DIMENSION mismatch)",
                 reader.line_no);
        }
        const auto text = trim(line);
        if (text.empty() || text == "EOF") {
            fail("coordinate section ended after " + std::to_string(records.size()) +
                     " of " + std::to_string(count) + " records (DIMENSION mismatch)",
                 reader.line_no);
        }
        const auto fields = split_fields(text);
        if (fields.size() != 3) {
            fail("malformed coordinate record, expected 'id x y'", reader.line_no);
        }
        const auto id = parse_int(fields[0]);
        const auto x = parse_double(fields[1]);
        const auto y = parse_double(fields[2]);
        if (!id || !x || !y) fail("malformed coordinate record", reader.line_no);
        if (!seen.insert(static_cast<int>(*id)).second) {
            fail("duplicate node id " + std::to_string(*id), reader.line_no);
        }
        records.push_back({static_cast<int>(*id), Point(*x, *y)});
    }
    return records;
}

// Reads whitespace-split integer rows until a lone -1.
std::vector<std::vector<long long>> read_int_section(LineReader& reader, const std::string& name,
                                                     size_t row_len) {
    std::vector<std::vector<long long>> rows;
    std::string line;
    while (true) {
        if (!reader.next(line)) fail(name + " not terminated by -1", reader.line_no);
        const auto text = trim(line);
        if (text.empty()) continue;
        if (text == "-1") return rows;
        const auto fields = split_fields(text);
        std::vector<long long> row;
        for (auto f : fields) {
            const auto v = parse_int(f);
            if (!v) fail("malformed " + name + " entry", reader.line_no);
            row.push_back(*v);
        }
        if (row.size() != row_len) {
            fail(name + " row has " + std::to_string(row.size()) + " fields, expected " +
                     std::to_string(row_len),
                 reader.line_no);
        }
        rows.push_back(std::move(row));
    }
}

} // namespace

TsplibPointCloud parse_tsplib(std::istream& in) {
    LineReader reader{in};
    TsplibPointCloud cloud;
    std::string line;
    int dimension = -1;
    bool have_metric = false;
    bool have_coords = false;

    while (reader.next(line)) {
        const auto text = trim(line);
        if (text.empty()) continue;
        const auto header = split_header(text);
        if (header.key == "EOF") break;
        if (header.key == "NODE_COORD_SECTION") {
            if (dimension < 0) fail("NODE_COORD_SECTION before DIMENSION", reader.line_no);
            const auto records = read_coord_records(reader, dimension);
            for (const auto& r : records) {
                cloud.ids.push_back(r.id);
                cloud.points.push_back(r.point);
            }
            have_coords = true;
            continue;
        }
        if (!header.has_colon) {
            if (header.key == "DISPLAY_DATA_SECTION" || header.key == "TOUR_SECTION") {
                fail("unsupported section " + header.key, reader.line_no);
            }
            fail("unexpected line", reader.line_no);
        }
        if (header.key == "NAME") {
            cloud.name = header.value;
        } else if (header.key == "TYPE") {
            if (upper(header.value) != "TSP") {
                fail("unsupported TYPE '" + header.value + "', expected TSP", reader.line_no);
            }
        } else if (header.key == "DIMENSION") {
            const auto v = parse_int(header.value);
            if (!v || *v <= 0) fail("invalid DIMENSION", reader.line_no);
            dimension = static_cast<int>(*v);
        } else if (header.key == "EDGE_WEIGHT_TYPE") {
            if (upper(header.value) != "EUC_2D") {
                fail("unsupported EDGE_WEIGHT_TYPE '" + header.value + "'", reader.line_no);
            }
            have_metric = true;
        }
        // other headers (COMMENT, DISPLAY_DATA_TYPE, ...) are ignored
    }

    if (dimension < 0) fail("missing DIMENSION", reader.line_no);
    if (!have_metric) fail("missing EDGE_WEIGHT_TYPE", reader.line_no);
    if (!have_coords) fail("missing NODE_COORD_SECTION", reader.line_no);
    return cloud;
}

TsplibPointCloud load_tsplib_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        auto cloud = parse_tsplib(in);
        if (cloud.name.empty()) cloud.name = path.stem().string();
        return cloud;
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), 0);
    }
}

void write_instance(const Instance& instance, std::ostream& out) {
    const int records = instance.num_nodes() - 1; // depot written once
    out << "NAME : " << instance.name() << "\n";
    out << "TYPE : TSPPC\n";
    out << "FORMAT_VERSION : 1\n";
    if (!instance.source().empty()) out << "SOURCE : " << instance.source() << "\n";
    if (!instance.direction().empty()) out << "DIRECTION : " << instance.direction() << "\n";
    out << "METRIC : " << metric_name(instance.metric()) << "\n";
    out << "DIMENSION : " << records << "\n";
    out << "NODE_COORD_SECTION\n";
    for (NodeId node = 0; node < records; ++node) {
        const auto& p = instance.point(node);
        out << node + 1 << " " << format_double(p.x()) << " " << format_double(p.y()) << "\n";
    }
    out << "DEPOT_SECTION\n1\n-1\n";

    out << "PRECEDENCE_SECTION\n";
    const auto& prec = instance.precedence();
    for (NodeId parent : prec.parent_nodes) {
        for (NodeId child : prec.children_of[parent]) {
            out << parent + 1 << " " << child + 1 << "\n";
        }
    }
    out << "-1\n";

    out << "PAYLOAD_SECTION\n";
    for (const auto& commodity : instance.commodities()) {
        for (const auto& [node, q] : commodity.payloads) {
            out << node + 1 << " " << commodity.id << " " << format_double(q) << "\n";
        }
    }
    out << "-1\n";

    if (!instance.tsplib_ids().empty()) {
        out << "TSPLIB_ID_SECTION\n";
        for (NodeId node = 0; node < records; ++node) {
            out << node + 1 << " " << instance.tsplib_ids()[static_cast<size_t>(node)] << "\n";
        }
        out << "-1\n";
    }
    out << "EOF\n";
}

Instance read_instance(std::istream& in) {
    LineReader reader{in};
    std::string line;
    InstanceData data;
    int dimension = -1;
    bool have_type = false;
    bool have_version = false;
    std::vector<CoordRecord> records;
    std::vector<int> depot_ids;
    std::vector<std::vector<long long>> precedence_rows;
    struct PayloadRow {
        long long node, commodity;
        double q;
    };
    std::vector<PayloadRow> payload_rows;
    std::vector<std::vector<long long>> id_rows;

    while (reader.next(line)) {
        const auto text = trim(line);
        if (text.empty()) continue;
        const auto header = split_header(text);
        if (header.key == "EOF") break;
        if (header.key == "NODE_COORD_SECTION") {
            if (dimension < 0) fail("NODE_COORD_SECTION before DIMENSION", reader.line_no);
            records = read_coord_records(reader, dimension);
            continue;
        }
        if (header.key == "DEPOT_SECTION") {
            for (const auto& row : read_int_section(reader, "DEPOT_SECTION", 1)) {
                depot_ids.push_back(static_cast<int>(row[0]));
            }
            continue;
        }
        if (header.key == "PRECEDENCE_SECTION") {
            precedence_rows = read_int_section(reader, "PRECEDENCE_SECTION", 2);
            continue;
        }
        if (header.key == "PAYLOAD_SECTION") {
            // node commodity q, q may be fractional
            while (true) {
                if (!reader.next(line)) fail("PAYLOAD_SECTION not terminated by -1", reader.line_no);
                const auto body = trim(line);
                if (body.empty()) continue;
                if (body == "-1") break;
                const auto fields = split_fields(body);
                if (fields.size() != 3) {
                    fail("PAYLOAD_SECTION row needs 'node commodity q'", reader.line_no);
                }
                const auto node = parse_int(fields[0]);
                const auto commodity = parse_int(fields[1]);
                const auto q = parse_double(fields[2]);
                if (!node || !commodity || !q) fail("malformed PAYLOAD_SECTION entry", reader.line_no);
                payload_rows.push_back({*node, *commodity, *q});
            }
            continue;
        }
        if (header.key == "TSPLIB_ID_SECTION") {
            id_rows = read_int_section(reader, "TSPLIB_ID_SECTION", 2);
            continue;
        }
        if (!header.has_colon) fail("unknown section " + header.key, reader.line_no);
        if (header.key == "NAME") {
            data.name = header.value;
        } else if (header.key == "TYPE") {
            if (upper(header.value) != "TSPPC") {
                fail("unsupported TYPE '" + header.value + "', expected TSPPC", reader.line_no);
            }
            have_type = true;
        } else if (header.key == "FORMAT_VERSION") {
            if (header.value != "1") {
                fail("unsupported FORMAT_VERSION '" + header.value + "'", reader.line_no);
            }
            have_version = true;
        } else if (header.key == "SOURCE") {
            data.source = header.value;
        } else if (header.key == "DIRECTION") {
            data.direction = header.value;
        } else if (header.key == "METRIC") {
            const auto metric = metric_from_name(header.value);
            if (!metric) fail("unknown METRIC '" + header.value + "'", reader.line_no);
            data.metric = *metric;
        } else if (header.key == "DIMENSION") {
            const auto v = parse_int(header.value);
            if (!v || *v <= 0) fail("invalid DIMENSION", reader.line_no);
            dimension = static_cast<int>(*v);
        } else if (header.key != "COMMENT") {
            fail("unknown header " + header.key, reader.line_no);
        }
    }

    if (!have_type) fail("missing TYPE", reader.line_no);
    if (!have_version) fail("missing FORMAT_VERSION", reader.line_no);
    if (records.empty()) fail("missing NODE_COORD_SECTION", reader.line_no);
    if (depot_ids.size() != 1) {
        fail("DEPOT_SECTION must name exactly one node", reader.line_no);
    }

    // Re-base to internal numbering: depot record becomes node 0 (and the
    // final end-depot slot), remaining records keep file order.
    std::map<int, NodeId> to_internal;
    const int depot_id = depot_ids[0];
    bool depot_found = false;
    for (const auto& r : records) {
        if (r.id == depot_id) depot_found = true;
    }
    if (!depot_found) {
        throw ValidationError("DEPOT_SECTION references unknown node id " +
                              std::to_string(depot_id));
    }
    data.points.push_back(Point::Zero());
    for (const auto& r : records) {
        if (r.id == depot_id) {
            data.points[0] = r.point;
            to_internal[r.id] = 0;
        } else {
            to_internal[r.id] = static_cast<NodeId>(data.points.size());
            data.points.push_back(r.point);
        }
    }
    data.points.push_back(data.points[0]);

    auto map_node = [&](long long file_id, const char* where) {
        auto it = to_internal.find(static_cast<int>(file_id));
        if (it == to_internal.end()) {
            throw ValidationError(std::string(where) + " references unknown node id " +
                                  std::to_string(file_id));
        }
        return it->second;
    };

    std::map<int, Commodity> by_id;
    std::vector<int> commodity_order;
    for (const auto& row : payload_rows) {
        const NodeId node = map_node(row.node, "PAYLOAD_SECTION");
        auto [it, inserted] = by_id.try_emplace(static_cast<int>(row.commodity));
        if (inserted) {
            it->second.id = static_cast<int>(row.commodity);
            commodity_order.push_back(it->second.id);
        }
        it->second.payloads.emplace_back(node, row.q);
    }
    for (int id : commodity_order) {
        auto& commodity = by_id[id];
        std::sort(commodity.payloads.begin(), commodity.payloads.end());
        data.commodities.push_back(std::move(commodity));
    }

    if (!id_rows.empty()) {
        data.tsplib_ids.assign(data.points.size(), -1);
        for (const auto& row : id_rows) {
            const NodeId node = map_node(row[0], "TSPLIB_ID_SECTION");
            data.tsplib_ids[static_cast<size_t>(node)] = static_cast<int>(row[1]);
        }
        data.tsplib_ids.back() = data.tsplib_ids.front();
        for (int id : data.tsplib_ids) {
            if (id < 0) throw ValidationError("TSPLIB_ID_SECTION does not cover every node");
        }
    }

    Instance instance(std::move(data));

    // The precedence pairs stored in the file must agree with what the
    // payload signs imply.
    std::set<std::pair<NodeId, NodeId>> from_file;
    for (const auto& row : precedence_rows) {
        const NodeId parent = map_node(row[0], "PRECEDENCE_SECTION");
        const NodeId child = map_node(row[1], "PRECEDENCE_SECTION");
        from_file.insert({parent, child});
    }
    std::set<std::pair<NodeId, NodeId>> from_payloads;
    const auto& prec = instance.precedence();
    for (NodeId parent : prec.parent_nodes) {
        for (NodeId child : prec.children_of[parent]) {
            from_payloads.insert({parent, child});
        }
    }
    if (from_file != from_payloads) {
        throw ValidationError("PRECEDENCE_SECTION disagrees with PAYLOAD_SECTION");
    }
    return instance;
}

void save_instance_file(const Instance& instance, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path.string() + " for writing");
    write_instance(instance, out);
    if (!out) throw ParseError("write to " + path.string() + " failed");
}

Instance load_instance_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return read_instance(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), 0);
    }
}

void write_tour(const Tour& tour, const Instance& instance, const std::string& method,
                std::ostream& out) {
    out << "NAME : " << instance.name() << "." << method << "\n";
    out << "TYPE : TOUR\n";
    out << "DIMENSION : " << tour.order.size() << "\n";
    out << "COMMENT : COST " << format_double(tour.cost) << "\n";
    out << "COMMENT : METRIC " << metric_name(instance.metric()) << "\n";
    out << "COMMENT : METHOD " << method << "\n";
    out << "TOUR_SECTION\n";
    for (NodeId node : tour.order) out << node << "\n";
    out << "-1\nEOF\n";
}

TourFile read_tour(std::istream& in) {
    LineReader reader{in};
    TourFile file;
    std::string line;
    bool have_body = false;
    while (reader.next(line)) {
        const auto text = trim(line);
        if (text.empty()) continue;
        const auto header = split_header(text);
        if (header.key == "EOF") break;
        if (header.key == "TOUR_SECTION") {
            for (const auto& row : read_int_section(reader, "TOUR_SECTION", 1)) {
                file.order.push_back(static_cast<NodeId>(row[0]));
            }
            have_body = true;
            continue;
        }
        if (!header.has_colon) fail("unexpected line", reader.line_no);
        if (header.key == "NAME") {
            file.name = header.value;
        } else if (header.key == "TYPE") {
            if (upper(header.value) != "TOUR") {
                fail("unsupported TYPE '" + header.value + "', expected TOUR", reader.line_no);
            }
        } else if (header.key == "COMMENT") {
            const auto fields = split_fields(header.value);
            if (fields.size() == 2 && fields[0] == "COST") {
                const auto cost = parse_double(fields[1]);
                if (!cost) fail("malformed COST comment", reader.line_no);
                file.cost = *cost;
                file.has_cost = true;
            } else if (fields.size() == 2 && fields[0] == "METRIC") {
                file.metric = std::string(fields[1]);
            } else if (fields.size() == 2 && fields[0] == "METHOD") {
                file.method = std::string(fields[1]);
            }
        }
        // DIMENSION and other headers are informational
    }
    if (!have_body) fail("missing TOUR_SECTION", reader.line_no);
    return file;
}

void save_tour_file(const Tour& tour, const Instance& instance, const std::string& method,
                    const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path.string() + " for writing");
    write_tour(tour, instance, method, out);
    if (!out) throw ParseError("write to " + path.string() + " failed");
}

TourFile load_tour_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return read_tour(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), 0);
    }
}

} // namespace tsppc
