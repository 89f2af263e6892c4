#include "tsppc/instance.hpp"

#include "tsppc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace tsppc {

double Commodity::payload_at(NodeId node) const {
    for (const auto& [n, q] : payloads) {
        if (n == node) return q;
    }
    return 0.0;
}

double Commodity::total_positive_payload() const {
    double total = 0.0;
    for (const auto& [n, q] : payloads) {
        if (q > 0) total += q;
    }
    return total;
}

bool PrecedenceSet::is_parent(NodeId node) const {
    return std::binary_search(parent_nodes.begin(), parent_nodes.end(), node);
}

bool PrecedenceSet::is_child(NodeId node) const {
    return std::binary_search(child_nodes.begin(), child_nodes.end(), node);
}

PrecedenceSet derive_precedence(const std::vector<Commodity>& commodities, int num_nodes) {
    PrecedenceSet prec;
    prec.parents_of.resize(num_nodes);
    prec.children_of.resize(num_nodes);
    for (const auto& commodity : commodities) {
        std::vector<NodeId> parents;
        std::vector<NodeId> children;
        for (const auto& [node, q] : commodity.payloads) {
            if (node < 0 || node >= num_nodes) {
                throw ValidationError("commodity " + std::to_string(commodity.id) +
                                      " references node " + std::to_string(node) +
                                      " outside 0.." + std::to_string(num_nodes - 1));
            }
            if (q > 0) parents.push_back(node);
            if (q < 0) children.push_back(node);
        }
        for (NodeId child : children) {
            for (NodeId parent : parents) {
                prec.parents_of[child].push_back(parent);
                prec.children_of[parent].push_back(child);
            }
        }
    }
    auto dedupe = [](std::vector<NodeId>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    for (NodeId node = 0; node < num_nodes; ++node) {
        dedupe(prec.parents_of[node]);
        dedupe(prec.children_of[node]);
        if (!prec.parents_of[node].empty()) prec.child_nodes.push_back(node);
        if (!prec.children_of[node].empty()) prec.parent_nodes.push_back(node);
    }
    return prec;
}

Instance::Instance(InstanceData data) : data_(std::move(data)) {
    const auto& points = data_.points;
    if (points.size() < 2) {
        throw ValidationError("instance needs at least the two depot nodes, got " +
                              std::to_string(points.size()));
    }
    for (const auto& p : points) {
        if (!p.allFinite()) throw ValidationError("non-finite node coordinate");
    }
    if (points.front() != points.back()) {
        throw ValidationError("start and end depot must be co-located");
    }
    if (!data_.tsplib_ids.empty() && data_.tsplib_ids.size() != points.size()) {
        throw ValidationError("tsplib id table size does not match node count");
    }

    const int n = num_nodes();
    std::set<int> seen_ids;
    for (const auto& commodity : data_.commodities) {
        if (!seen_ids.insert(commodity.id).second) {
            throw ValidationError("duplicate commodity id " + std::to_string(commodity.id));
        }
        if (commodity.payloads.size() < 2) {
            throw ValidationError("commodity " + std::to_string(commodity.id) +
                                  " needs at least a pickup and a delivery");
        }
        double sum = 0.0;
        NodeId prev = -1;
        for (const auto& [node, q] : commodity.payloads) {
            if (node <= 0 || node >= n - 1) {
                throw ValidationError("commodity " + std::to_string(commodity.id) +
                                      " has a payload at non-site node " + std::to_string(node));
            }
            if (node <= prev) {
                throw ValidationError("commodity " + std::to_string(commodity.id) +
                                      " payloads must be sorted by node without repeats");
            }
            prev = node;
            if (q == 0.0 || !std::isfinite(q)) {
                throw ValidationError("commodity " + std::to_string(commodity.id) +
                                      " has a zero or non-finite payload at node " +
                                      std::to_string(node));
            }
            sum += q;
        }
        if (sum != 0.0) {
            throw ValidationError("commodity " + std::to_string(commodity.id) +
                                  " payloads do not sum to zero");
        }
    }

    precedence_ = derive_precedence(data_.commodities, n);
    for (NodeId node : precedence_.child_nodes) {
        if (precedence_.is_parent(node)) {
            throw ValidationError("node " + std::to_string(node) +
                                  " is both a pickup and a delivery; chains are not supported");
        }
    }

    ratio_epsilon_ = 1e-12 * bounding_box_diagonal(points);
}

const Point& Instance::point(NodeId node) const {
    if (node < 0 || node >= num_nodes()) {
        throw DomainError("node id " + std::to_string(node) + " out of range");
    }
    return data_.points[static_cast<size_t>(node)];
}

double Instance::cost(NodeId i, NodeId j) const {
    if (i < 0 || i >= num_nodes() || j < 0 || j >= num_nodes()) {
        throw DomainError("cost query outside node range: (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
    }
    if (i == j) return 0.0;
    return metric_distance(data_.points[static_cast<size_t>(i)],
                           data_.points[static_cast<size_t>(j)], data_.metric);
}

} // namespace tsppc
