#include "tsppc/exact.hpp"

#include "tsppc/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace tsppc {

ExactResult exact_oracle(const Instance& instance, int node_limit) {
    const int m = instance.num_sites();
    if (m > node_limit) {
        throw SizeError("instance has " + std::to_string(m) + " sites, oracle limit is " +
                        std::to_string(node_limit));
    }

    ExactResult result;
    result.optimal = true;
    if (m == 0) {
        result.tour.order = {instance.start_depot(), instance.end_depot()};
        result.tour.cost = 0.0;
        return result;
    }

    // Site s (1..m) is bit s-1.
    std::vector<uint32_t> parent_mask(static_cast<size_t>(m) + 1, 0);
    const auto& prec = instance.precedence();
    for (NodeId s = 1; s <= m; ++s) {
        for (NodeId parent : prec.parents_of[static_cast<size_t>(s)]) {
            parent_mask[static_cast<size_t>(s)] |= 1u << (parent - 1);
        }
    }

    std::vector<std::vector<double>> cost(static_cast<size_t>(m) + 2,
                                          std::vector<double>(static_cast<size_t>(m) + 2));
    for (NodeId i = 0; i < m + 2; ++i) {
        for (NodeId j = 0; j < m + 2; ++j) {
            cost[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                instance.cost(i == m + 1 ? instance.end_depot() : i,
                              j == m + 1 ? instance.end_depot() : j);
        }
    }

    constexpr double kInf = std::numeric_limits<double>::infinity();
    const size_t num_masks = size_t{1} << m;
    std::vector<double> dp(num_masks * static_cast<size_t>(m), kInf);
    std::vector<uint8_t> pred(num_masks * static_cast<size_t>(m), 0);
    auto cell = [m](size_t mask, NodeId last) {
        return mask * static_cast<size_t>(m) + static_cast<size_t>(last - 1);
    };

    for (NodeId s = 1; s <= m; ++s) {
        if (parent_mask[static_cast<size_t>(s)] == 0) {
            dp[cell(size_t{1} << (s - 1), s)] = cost[0][static_cast<size_t>(s)];
        }
    }

    for (size_t mask = 1; mask < num_masks; ++mask) {
        for (NodeId last = 1; last <= m; ++last) {
            if (!(mask & (size_t{1} << (last - 1)))) continue;
            const double base = dp[cell(mask, last)];
            if (base == kInf) continue;
            for (NodeId next = 1; next <= m; ++next) {
                if (mask & (size_t{1} << (next - 1))) continue;
                if ((parent_mask[static_cast<size_t>(next)] & mask) !=
                    parent_mask[static_cast<size_t>(next)])
                    continue;
                const size_t to = mask | (size_t{1} << (next - 1));
                const double candidate =
                    base + cost[static_cast<size_t>(last)][static_cast<size_t>(next)];
                if (candidate < dp[cell(to, next)]) {
                    dp[cell(to, next)] = candidate;
                    pred[cell(to, next)] = static_cast<uint8_t>(last);
                }
            }
        }
    }

    const size_t full = num_masks - 1;
    NodeId best_last = -1;
    double best_cost = kInf;
    for (NodeId last = 1; last <= m; ++last) {
        const double base = dp[cell(full, last)];
        if (base == kInf) continue;
        const double total = base + cost[static_cast<size_t>(last)][static_cast<size_t>(m) + 1];
        if (total < best_cost) {
            best_cost = total;
            best_last = last;
        }
    }
    if (best_last < 0) {
        throw ValidationError("no feasible tour; precedence data is inconsistent");
    }

    std::vector<NodeId> reversed;
    size_t mask = full;
    NodeId last = best_last;
    while (last != 0) {
        reversed.push_back(last);
        const NodeId previous = pred[cell(mask, last)];
        mask &= ~(size_t{1} << (last - 1));
        last = previous;
    }
    result.tour.order.push_back(instance.start_depot());
    result.tour.order.insert(result.tour.order.end(), reversed.rbegin(), reversed.rend());
    result.tour.order.push_back(instance.end_depot());
    result.tour.cost = tour_cost(instance, result.tour.order);
    return result;
}

} // namespace tsppc
