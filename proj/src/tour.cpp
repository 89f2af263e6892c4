#include "tsppc/tour.hpp"

#include "tsppc/errors.hpp"

#include <cmath>
#include <vector>

namespace tsppc {

namespace {

// Returns an empty string when the order is structurally a valid visiting
// sequence, else a description of the first defect.
std::string structure_defect(const Instance& instance, std::span<const NodeId> order) {
    const int n = instance.num_nodes();
    if (static_cast<int>(order.size()) != n) {
        return "order has " + std::to_string(order.size()) + " entries, expected " +
               std::to_string(n);
    }
    if (order.front() != instance.start_depot()) {
        return "order must begin at the start depot";
    }
    if (order.back() != instance.end_depot()) {
        return "order must end at the end depot";
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (NodeId node : order) {
        if (node < 0 || node >= n) {
            return "unknown node id " + std::to_string(node);
        }
        if (seen[static_cast<size_t>(node)]) {
            return "node " + std::to_string(node) + " visited twice";
        }
        seen[static_cast<size_t>(node)] = 1;
    }
    return {};
}

} // namespace

double tour_cost(const Instance& instance, std::span<const NodeId> order) {
    if (auto defect = structure_defect(instance, order); !defect.empty()) {
        throw ValidationError(defect);
    }
    double total = 0.0;
    for (size_t i = 0; i + 1 < order.size(); ++i) {
        total += instance.cost(order[i], order[i + 1]);
    }
    return total;
}

FeasibilityReport validate_tour(const Instance& instance, std::span<const NodeId> order) {
    FeasibilityReport report;
    if (auto defect = structure_defect(instance, order); !defect.empty()) {
        report.error = TourError::BadStructure;
        report.message = defect;
        return report;
    }

    const auto& commodities = instance.commodities();
    std::vector<double> level(commodities.size(), 0.0);
    double total_level = 0.0;
    for (NodeId node : order) {
        for (size_t c = 0; c < commodities.size(); ++c) {
            const double q = commodities[c].payload_at(node);
            if (q == 0.0) continue;
            level[c] += q;
            total_level += q;
            if (level[c] < 0.0) {
                report.error = TourError::PrecedenceViolated;
                report.message = "node " + std::to_string(node) + " drops commodity " +
                                 std::to_string(commodities[c].id) + " below zero";
                report.violating_node = node;
                report.violating_commodity = commodities[c].id;
                return report;
            }
        }
        report.max_payload = std::max(report.max_payload, total_level);
    }
    report.payload_returns_to_zero = total_level == 0.0;
    report.feasible = report.payload_returns_to_zero;
    if (!report.feasible) {
        report.error = TourError::PrecedenceViolated;
        report.message = "payload does not return to zero at the end depot";
    }
    return report;
}

} // namespace tsppc
