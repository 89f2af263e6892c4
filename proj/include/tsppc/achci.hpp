#pragma once

#include "tsppc/instance.hpp"
#include "tsppc/subtour.hpp"
#include "tsppc/tour.hpp"

#include <vector>

namespace tsppc {

// Orientation of the initial hull cycle. Reversed flips the cycle before the
// depot is placed, producing the mirror-direction construction.
enum class HullDirection {
    AsBuilt,
    Reversed,
};

struct AchciOptions {
    // Maintain per-node best-arc candidates incrementally instead of
    // rescanning every candidate each iteration. Both engines produce the
    // same tour; the rescanning one exists for equivalence checks and for
    // timing the cubic-cost baseline.
    bool incremental = true;
    bool record_trace = false;
};

struct InsertionStep {
    NodeId node = -1;
    int arc = -1; // arc index at the moment of insertion
    double ratio = 0.0;
};

struct AchciDirectionalResult {
    Tour tour;
    std::vector<NodeId> hull_nodes;     // oriented hull cycle, depot excluded if interior
    std::vector<NodeId> initial_order;  // subtour after depot placement and rotation
    bool depot_inserted_by_ratio = false;
    int insertions = 0;
    std::vector<InsertionStep> trace;   // filled when record_trace is set
};

// Convex-hull cheapest-insertion construction for one hull orientation:
// seeds the subtour with the hull of the depot and all non-child sites and
// places the depot at its smallest-ratio arc. Then each round assigns every
// free node the arc in its feasible segment with the cheapest detour, and
// inserts the node whose assigned arc has the smallest detour-to-arc-length
// ratio. Ties pick the smallest node id, then the earliest arc.
AchciDirectionalResult achci_directional(const Instance& instance, HullDirection direction,
                                         const AchciOptions& options = {});

struct AchciResult {
    Tour tour; // the cheaper of the two directional tours
    double as_built_cost = 0.0;
    double reversed_cost = 0.0;
    HullDirection selected = HullDirection::AsBuilt;
};

// Runs both hull orientations and keeps the cheaper tour (the as-built one
// on exact cost ties).
AchciResult achci(const Instance& instance, const AchciOptions& options = {});

} // namespace tsppc
