#include "tsppc/generator.hpp"

#include "tsppc/errors.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace tsppc {

const char* direction_name(Direction d) {
    switch (d) {
    case Direction::ChildrenCentral: return "children_central";
    case Direction::ParentsCentral: return "parents_central";
    }
    return "children_central";
}

std::optional<Direction> direction_from_name(std::string_view name) {
    if (name == "children_central" || name == "children") return Direction::ChildrenCentral;
    if (name == "parents_central" || name == "parents") return Direction::ParentsCentral;
    return std::nullopt;
}

Instance generate(const TsplibPointCloud& cloud, const GeneratorConfig& config) {
    const int n = static_cast<int>(cloud.points.size());
    if (n < 3) throw DomainError("generator needs at least 3 points");
    if (!cloud.ids.empty() && cloud.ids.size() != cloud.points.size()) {
        throw DomainError("point/id count mismatch in cloud");
    }

    const Point center = centroid(cloud.points);
    std::vector<int> order(cloud.points.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return (cloud.points[a] - center).squaredNorm() <
               (cloud.points[b] - center).squaredNorm();
    });

    // Most central point is the depot; remaining points become sites
    // 1..n-1 in ascending centroid distance.
    InstanceData data;
    data.points.reserve(cloud.points.size() + 1);
    data.tsplib_ids.reserve(cloud.points.size() + 1);
    for (int idx : order) {
        data.points.push_back(cloud.points[idx]);
        data.tsplib_ids.push_back(cloud.ids.empty() ? idx + 1 : cloud.ids[idx]);
    }
    data.points.push_back(data.points.front());
    data.tsplib_ids.push_back(data.tsplib_ids.front());

    // Pair the outermost unassigned site with the innermost; when three sites
    // remain the innermost becomes the single central node of a three-node
    // group. Site counts leave no other ending.
    const bool children_central = config.direction == Direction::ChildrenCentral;
    auto make_commodity = [&](int id, std::vector<NodeId> peripheral, NodeId central) {
        Commodity commodity;
        commodity.id = id;
        const double central_q = children_central ? -static_cast<double>(peripheral.size())
                                                  : static_cast<double>(peripheral.size());
        const double peripheral_q = children_central ? 1.0 : -1.0;
        commodity.payloads.emplace_back(central, central_q);
        for (NodeId node : peripheral) commodity.payloads.emplace_back(node, peripheral_q);
        std::sort(commodity.payloads.begin(), commodity.payloads.end());
        return commodity;
    };

    int low = 1;
    int high = n - 1;
    int next_id = 1;
    while (low < high) {
        if (high - low == 2) {
            data.commodities.push_back(make_commodity(next_id++, {low + 1, high}, low));
            low = high + 1;
            break;
        }
        data.commodities.push_back(make_commodity(next_id++, {high}, low));
        ++low;
        --high;
    }
    assert(low > high);

    data.name = cloud.name + (children_central ? "_cc" : "_pc");
    data.metric = config.metric;
    data.source = cloud.name;
    data.direction = direction_name(config.direction);
    return Instance(std::move(data));
}

} // namespace tsppc
