#pragma once

#include "tsppc/geometry.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tsppc {

// Node ids are tour slots 0..2n+1: 0 is the start depot, the last slot the
// identically located end depot, everything between a site to visit.
using NodeId = int;

// One transported item: signed payload change per visited node. Entries are
// sparse, sorted by node, nonzero, and sum to zero (+1/+1/-2 for a
// two-parent group, +1/-1 for a plain pickup/delivery pair).
struct Commodity {
    int id = 0;
    std::vector<std::pair<NodeId, double>> payloads;

    double payload_at(NodeId node) const;
    // Sum of positive entries == maximum level this commodity can reach.
    double total_positive_payload() const;
};

// Parent/child relation derived from commodity signs: j is a parent of k iff
// some commodity is picked up (q > 0) at j and dropped (q < 0) at k.
struct PrecedenceSet {
    std::vector<std::vector<NodeId>> parents_of;
    std::vector<std::vector<NodeId>> children_of;
    std::vector<NodeId> parent_nodes; // sorted
    std::vector<NodeId> child_nodes;  // sorted

    bool is_parent(NodeId node) const;
    bool is_child(NodeId node) const;
};

PrecedenceSet derive_precedence(const std::vector<Commodity>& commodities, int num_nodes);

struct InstanceData {
    std::string name;
    // One Point per node slot, including the end depot (so size is 2n+2 and
    // front() equals back()).
    std::vector<Point> points;
    std::vector<Commodity> commodities;
    Metric metric = Metric::Euc2dRounded;

    // Provenance, empty when not applicable.
    std::string source;                // originating TSPLIB instance name
    std::string direction;             // "children_central" / "parents_central"
    std::vector<int> tsplib_ids;       // node id -> original 1-based TSPLIB id
};

/// Immutable TSP-PC instance. Construction validates all model invariants
/// (finite coordinates, co-located depots, zero-sum commodities with no
/// depot payload, depth-1 precedence) and throws ValidationError otherwise.
class Instance {
public:
    explicit Instance(InstanceData data);

    const std::string& name() const { return data_.name; }
    Metric metric() const { return data_.metric; }
    const std::string& source() const { return data_.source; }
    const std::string& direction() const { return data_.direction; }
    const std::vector<int>& tsplib_ids() const { return data_.tsplib_ids; }

    int num_nodes() const { return static_cast<int>(data_.points.size()); }
    int num_sites() const { return num_nodes() - 2; }
    NodeId start_depot() const { return 0; }
    NodeId end_depot() const { return num_nodes() - 1; }
    bool is_depot(NodeId node) const { return node == start_depot() || node == end_depot(); }

    const std::vector<Point>& points() const { return data_.points; }
    const Point& point(NodeId node) const;
    const std::vector<Commodity>& commodities() const { return data_.commodities; }
    const PrecedenceSet& precedence() const { return precedence_; }

    // Metric distance between two node slots; start and end depot are
    // interchangeable. Throws DomainError for out-of-range ids.
    double cost(NodeId i, NodeId j) const;

    // Denominator guard for zero-length arcs in insertion ratios:
    // 1e-12 x bounding-box diagonal.
    double ratio_epsilon() const { return ratio_epsilon_; }

private:
    InstanceData data_;
    PrecedenceSet precedence_;
    double ratio_epsilon_ = 0.0;
};

} // namespace tsppc
