#include "tsppc/subtour.hpp"

#include "tsppc/errors.hpp"

#include <algorithm>
#include <string>

namespace tsppc {

Subtour::Subtour(int num_nodes, std::vector<NodeId> order)
    : order_(std::move(order)), position_(static_cast<size_t>(num_nodes), -1) {
    for (size_t i = 0; i < order_.size(); ++i) {
        const NodeId node = order_[i];
        if (node < 0 || node >= num_nodes) {
            throw DomainError("subtour node " + std::to_string(node) + " out of range");
        }
        if (position_[static_cast<size_t>(node)] >= 0) {
            throw DomainError("subtour repeats node " + std::to_string(node));
        }
        position_[static_cast<size_t>(node)] = static_cast<int>(i);
    }
}

void Subtour::insert_at_arc(int arc, NodeId node) {
    if (arc < 0 || arc >= num_arcs()) {
        throw DomainError("insertion arc " + std::to_string(arc) + " out of range");
    }
    if (node < 0 || node >= static_cast<int>(position_.size()) || contains(node)) {
        throw DomainError("cannot insert node " + std::to_string(node));
    }
    order_.insert(order_.begin() + arc + 1, node);
    position_[static_cast<size_t>(node)] = arc + 1;
    for (size_t i = static_cast<size_t>(arc) + 2; i < order_.size(); ++i) {
        position_[static_cast<size_t>(order_[i])] = static_cast<int>(i);
    }
}

ArcRange feasible_segment(const Subtour& subtour, NodeId k, const PrecedenceSet& precedence) {
    const auto& parents = precedence.parents_of[static_cast<size_t>(k)];
    if (parents.empty()) return {0, subtour.num_arcs()};
    int latest = -1;
    for (NodeId parent : parents) {
        const int pos = subtour.position_of(parent);
        if (pos < 0) return {0, 0};
        latest = std::max(latest, pos);
    }
    return {latest, subtour.num_arcs()};
}

double insertion_ratio(const Instance& instance, NodeId i, NodeId j, NodeId k) {
    const double detour = instance.cost(i, k) + instance.cost(k, j);
    const double arc = instance.cost(i, j);
    if (arc > 0.0) return detour / arc;
    if (detour == 0.0) return 1.0;
    return detour / instance.ratio_epsilon();
}

double insertion_detour(const Instance& instance, NodeId i, NodeId j, NodeId k) {
    return instance.cost(i, k) + instance.cost(k, j) - instance.cost(i, j);
}

} // namespace tsppc
