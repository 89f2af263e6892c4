#include "tsppc/nearest_neighbor.hpp"

#include "tsppc/errors.hpp"

#include <limits>
#include <vector>

namespace tsppc {

Tour nearest_neighbor(const Instance& instance) {
    const int sites = instance.num_sites();
    const auto& prec = instance.precedence();
    std::vector<char> visited(static_cast<size_t>(instance.num_nodes()), 0);

    Tour tour;
    tour.order.reserve(static_cast<size_t>(instance.num_nodes()));
    tour.order.push_back(instance.start_depot());
    visited[0] = 1;

    NodeId current = instance.start_depot();
    for (int step = 0; step < sites; ++step) {
        NodeId best = -1;
        double best_cost = std::numeric_limits<double>::infinity();
        for (NodeId node = 1; node <= sites; ++node) {
            if (visited[static_cast<size_t>(node)]) continue;
            bool ready = true;
            for (NodeId parent : prec.parents_of[static_cast<size_t>(node)]) {
                if (!visited[static_cast<size_t>(parent)]) {
                    ready = false;
                    break;
                }
            }
            if (!ready) continue;
            const double c = instance.cost(current, node);
            if (c < best_cost) {
                best_cost = c;
                best = node;
            }
        }
        if (best < 0) {
            throw ValidationError("no feasible next node; precedence data is inconsistent");
        }
        tour.order.push_back(best);
        visited[static_cast<size_t>(best)] = 1;
        current = best;
    }
    tour.order.push_back(instance.end_depot());
    tour.cost = tour_cost(instance, tour.order);
    return tour;
}

} // namespace tsppc
