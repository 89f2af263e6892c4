#pragma once

#include "tsppc/instance.hpp"
#include "tsppc/tour.hpp"

namespace tsppc {

// Greedy chain construction: from the depot, repeatedly append the closest
// unvisited node whose parents have all been visited, then close at the end
// depot. Distance ties pick the smallest node id.
Tour nearest_neighbor(const Instance& instance);

} // namespace tsppc
