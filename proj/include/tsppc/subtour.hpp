#pragma once

#include "tsppc/instance.hpp"

#include <vector>

namespace tsppc {

// Half-open range of arc indices within a subtour; arc a joins positions a
// and a+1.
struct ArcRange {
    int first = 0;
    int last = 0;

    int size() const { return last - first; }
    bool empty() const { return first >= last; }
    bool contains(int arc) const { return arc >= first && arc < last; }
};

/// Growing partial tour anchored at the start and end depot. Keeps a
/// position index so membership and position lookups are O(1).
class Subtour {
public:
    Subtour(int num_nodes, std::vector<NodeId> order);

    const std::vector<NodeId>& order() const { return order_; }
    int size() const { return static_cast<int>(order_.size()); }
    int num_arcs() const { return size() - 1; }
    NodeId at(int position) const { return order_[static_cast<size_t>(position)]; }

    bool contains(NodeId node) const { return position_[static_cast<size_t>(node)] >= 0; }
    // Position of a member node; -1 when absent. The end depot reports the
    // last position even when it shares coordinates with the start.
    int position_of(NodeId node) const { return position_[static_cast<size_t>(node)]; }

    // Splices node into arc `arc`, i.e. between positions arc and arc+1.
    void insert_at_arc(int arc, NodeId node);

private:
    std::vector<NodeId> order_;
    std::vector<int> position_;
};

// Arc indices where node k may be inserted: anywhere for a parentless node,
// nowhere while any parent of k is missing, and otherwise every arc from the
// latest-positioned parent onward.
ArcRange feasible_segment(const Subtour& subtour, NodeId k, const PrecedenceSet& precedence);

// Detour ratio (C_ik + C_kj) / C_ij of placing k on arc (i, j). A zero-length
// arc uses the instance epsilon guard as denominator, or yields exactly 1
// when the detour is also free.
double insertion_ratio(const Instance& instance, NodeId i, NodeId j, NodeId k);

// Detour cost C_ik + C_kj - C_ij of placing k on arc (i, j). Can dip slightly
// below zero under the rounded metric, which tolerates tiny triangle
// violations.
double insertion_detour(const Instance& instance, NodeId i, NodeId j, NodeId k);

} // namespace tsppc
