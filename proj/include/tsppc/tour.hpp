#pragma once

#include "tsppc/instance.hpp"

#include <span>
#include <string>
#include <vector>

namespace tsppc {

struct Tour {
    std::vector<NodeId> order; // full visiting order: 0, sites..., end depot
    double cost = 0.0;
};

// Sum of arc costs along the order. Throws ValidationError unless the order
// visits every node exactly once, starting at the start depot and ending at
// the end depot.
double tour_cost(const Instance& instance, std::span<const NodeId> order);

enum class TourError {
    None,
    BadStructure,       // wrong length, duplicates, bad endpoints, unknown ids
    PrecedenceViolated, // a delivery before one of its pickups
};

struct FeasibilityReport {
    bool feasible = false;
    TourError error = TourError::None;
    std::string message;
    NodeId violating_node = -1;
    int violating_commodity = -1;
    double max_payload = 0.0;          // peak simultaneous load over all commodities
    bool payload_returns_to_zero = false;
};

// Structural and precedence check via payload simulation: walks the order
// accumulating every commodity's payload and flags the first node where any
// level would go negative.
FeasibilityReport validate_tour(const Instance& instance, std::span<const NodeId> order);

} // namespace tsppc
