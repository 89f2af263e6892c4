#include "tsppc/achci.hpp"

#include "tsppc/errors.hpp"
#include "tsppc/geometry.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace tsppc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Best arc for one node, identified by the arc's tail so it stays valid
// while other arcs shift position. The arc is the one with the cheapest
// detour in the node's feasible segment; the ratio at that arc is the key
// used when competing against other nodes.
struct Candidate {
    double detour = kInf;
    double ratio = kInf;
    NodeId arc_tail = -1;
};

Candidate scan_segment(const Instance& instance, const Subtour& subtour, NodeId k,
                       ArcRange range) {
    Candidate best;
    int best_arc = -1;
    for (int arc = range.first; arc < range.last; ++arc) {
        const double detour = insertion_detour(instance, subtour.at(arc), subtour.at(arc + 1), k);
        if (detour < best.detour) {
            best.detour = detour;
            best_arc = arc;
        }
    }
    if (best_arc >= 0) {
        best.arc_tail = subtour.at(best_arc);
        best.ratio = insertion_ratio(instance, best.arc_tail, subtour.at(best_arc + 1), k);
    }
    return best;
}

std::vector<NodeId> oriented_hull(const Instance& instance, HullDirection direction) {
    std::vector<NodeId> pool;
    pool.push_back(instance.start_depot());
    const auto& prec = instance.precedence();
    for (NodeId node = 1; node <= instance.num_sites(); ++node) {
        if (!prec.is_child(node)) pool.push_back(node);
    }
    std::vector<Point> points;
    points.reserve(pool.size());
    for (NodeId node : pool) points.push_back(instance.point(node));

    std::vector<NodeId> hull;
    for (int idx : convex_hull(points)) hull.push_back(pool[static_cast<size_t>(idx)]);
    if (direction == HullDirection::Reversed) std::reverse(hull.begin(), hull.end());
    return hull;
}

// Rotates the hull cycle into a depot-to-depot sequence, inserting the depot
// at its cheapest arc when it is not a hull vertex.
std::vector<NodeId> place_depot(const Instance& instance, std::vector<NodeId> hull,
                                bool& inserted_by_ratio) {
    const NodeId depot = instance.start_depot();
    const int m = static_cast<int>(hull.size());
    auto it = std::find(hull.begin(), hull.end(), depot);
    int start = 0;
    if (it != hull.end()) {
        start = static_cast<int>(it - hull.begin());
    } else {
        inserted_by_ratio = true;
        double best_ratio = kInf;
        int best_arc = -1;
        for (int arc = 0; arc < m; ++arc) {
            const double ratio =
                insertion_ratio(instance, hull[static_cast<size_t>(arc)],
                                hull[static_cast<size_t>((arc + 1) % m)], depot);
            if (ratio < best_ratio) {
                best_ratio = ratio;
                best_arc = arc;
            }
        }
        start = (best_arc + 1) % m;
    }

    std::vector<NodeId> order;
    order.reserve(static_cast<size_t>(m) + 2);
    if (it != hull.end()) {
        for (int i = 0; i < m; ++i) order.push_back(hull[static_cast<size_t>((start + i) % m)]);
    } else {
        order.push_back(depot);
        for (int i = 0; i < m; ++i) order.push_back(hull[static_cast<size_t>((start + i) % m)]);
    }
    order.push_back(instance.end_depot());
    return order;
}

} // namespace

AchciDirectionalResult achci_directional(const Instance& instance, HullDirection direction,
                                         const AchciOptions& options) {
    AchciDirectionalResult result;
    result.hull_nodes = oriented_hull(instance, direction);
    result.initial_order =
        place_depot(instance, result.hull_nodes, result.depot_inserted_by_ratio);

    const int num_nodes = instance.num_nodes();
    Subtour subtour(num_nodes, result.initial_order);
    const auto& prec = instance.precedence();

    std::vector<NodeId> pending;
    for (NodeId node = 1; node <= instance.num_sites(); ++node) {
        if (!subtour.contains(node)) pending.push_back(node);
    }

    std::vector<Candidate> cache(static_cast<size_t>(num_nodes));
    if (options.incremental) {
        for (NodeId node : pending) {
            cache[static_cast<size_t>(node)] =
                scan_segment(instance, subtour, node, feasible_segment(subtour, node, prec));
        }
    }

    while (!pending.empty()) {
        if (!options.incremental) {
            for (NodeId node : pending) {
                cache[static_cast<size_t>(node)] =
                    scan_segment(instance, subtour, node, feasible_segment(subtour, node, prec));
            }
        }

        NodeId chosen = -1;
        double chosen_ratio = kInf;
        for (NodeId node : pending) {
            if (cache[static_cast<size_t>(node)].ratio < chosen_ratio) {
                chosen = node;
                chosen_ratio = cache[static_cast<size_t>(node)].ratio;
            }
        }
        if (chosen < 0) {
            throw ValidationError("no insertable node; precedence data is inconsistent");
        }

        const NodeId tail = cache[static_cast<size_t>(chosen)].arc_tail;
        const int arc = subtour.position_of(tail);
        const NodeId head = subtour.at(arc + 1);
        subtour.insert_at_arc(arc, chosen);
        ++result.insertions;
        if (options.record_trace) result.trace.push_back({chosen, arc, chosen_ratio});
        pending.erase(std::find(pending.begin(), pending.end(), chosen));

        if (options.incremental) {
            for (NodeId node : pending) {
                auto& cand = cache[static_cast<size_t>(node)];
                const auto& parents = prec.parents_of[static_cast<size_t>(node)];
                const bool gained_parent =
                    std::find(parents.begin(), parents.end(), chosen) != parents.end();
                if (gained_parent || (cand.arc_tail == tail && cand.detour < kInf)) {
                    cand = scan_segment(instance, subtour, node,
                                        feasible_segment(subtour, node, prec));
                    continue;
                }
                if (cand.detour == kInf) continue; // still blocked by a missing parent

                // The surviving best arc may now be beaten by one of the two
                // arcs created around the inserted node.
                const ArcRange range = feasible_segment(subtour, node, prec);
                for (int new_arc : {arc, arc + 1}) {
                    if (!range.contains(new_arc)) continue;
                    const double detour = insertion_detour(instance, subtour.at(new_arc),
                                                           subtour.at(new_arc + 1), node);
                    const int cur_pos = subtour.position_of(cand.arc_tail);
                    if (detour < cand.detour || (detour == cand.detour && new_arc < cur_pos)) {
                        cand.detour = detour;
                        cand.arc_tail = subtour.at(new_arc);
                        cand.ratio = insertion_ratio(instance, subtour.at(new_arc),
                                                     subtour.at(new_arc + 1), node);
                    }
                }
            }
        }
        (void)head;
    }

    result.tour.order = subtour.order();
    result.tour.cost = tour_cost(instance, result.tour.order);
    const auto report = validate_tour(instance, result.tour.order);
    if (!report.feasible) {
        throw ValidationError("constructed tour failed validation: " + report.message);
    }
    return result;
}

AchciResult achci(const Instance& instance, const AchciOptions& options) {
    AchciResult result;
    auto as_built = achci_directional(instance, HullDirection::AsBuilt, options);
    auto reversed = achci_directional(instance, HullDirection::Reversed, options);
    result.as_built_cost = as_built.tour.cost;
    result.reversed_cost = reversed.tour.cost;
    if (reversed.tour.cost < as_built.tour.cost) {
        result.tour = std::move(reversed.tour);
        result.selected = HullDirection::Reversed;
    } else {
        result.tour = std::move(as_built.tour);
        result.selected = HullDirection::AsBuilt;
    }
    return result;
}

} // namespace tsppc
