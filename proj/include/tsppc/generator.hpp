#pragma once

#include "tsppc/instance.hpp"
#include "tsppc/tsplib.hpp"

namespace tsppc {

// Which side of each precedence group sits near the centroid: children
// central puts deliveries in the middle and pickups on the periphery,
// parents central the reverse.
enum class Direction {
    ChildrenCentral,
    ParentsCentral,
};

const char* direction_name(Direction d);
std::optional<Direction> direction_from_name(std::string_view name);

// Equal centroid distances keep their file order (stable sort).
enum class TieBreak {
    StableFileOrder,
};

struct GeneratorConfig {
    Direction direction;
    TieBreak tie_break = TieBreak::StableFileOrder;
    Metric metric = Metric::Euc2dRounded;
};

// Turns a TSPLIB point cloud into a TSP-PC instance: the most central point
// becomes the depot, the rest pair up outermost-with-innermost, and each
// pair (or the one three-node group left when the site count is odd) becomes
// a unit-payload commodity. Needs at least 3 points.
Instance generate(const TsplibPointCloud& cloud, const GeneratorConfig& config);

} // namespace tsppc
