#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tsppc/achci.hpp"
#include "tsppc/errors.hpp"
#include "tsppc/generator.hpp"
#include "tsppc/nearest_neighbor.hpp"
#include "tsppc/subtour.hpp"
#include "tsppc/tsplib.hpp"

#include "support/builders.hpp"
#include "support/brute_force.hpp"

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>

using namespace tsppc;
using namespace tsppc::testing;

namespace {

const std::filesystem::path kDataDir = TSPPC_DATA_DIR;

Instance shifted(const Instance& instance, const Point& offset, double scale) {
    InstanceData data;
    data.name = instance.name();
    data.metric = instance.metric();
    for (const auto& p : instance.points()) data.points.push_back(scale * p + offset);
    for (const auto& c : instance.commodities()) data.commodities.push_back(c);
    return Instance(std::move(data));
}

std::vector<NodeId> restrict_to(const std::vector<NodeId>& order,
                                const std::vector<NodeId>& members) {
    const std::set<NodeId> keep(members.begin(), members.end());
    std::vector<NodeId> out;
    for (NodeId node : order) {
        if (keep.count(node)) out.push_back(node);
    }
    return out;
}

} // namespace

TEST_CASE("insertion ratio formula") {
    const auto instance = build_instance(Point(0, 0), {Point(2, 0), Point(1, 0), Point(1, 1)},
                                         {pair_commodity(1, 1, 2)});
    // midpoint of the arc
    CHECK(insertion_ratio(instance, 0, 1, 2) == doctest::Approx(1.0));
    // equilateral-like detour: (sqrt2 + sqrt2) / 2 for the unit-height point
    CHECK(insertion_ratio(instance, 0, 1, 3) ==
          doctest::Approx((std::sqrt(2.0) + std::sqrt(2.0)) / 2.0));

    // the detour of a point already on the arc is free
    CHECK(insertion_detour(instance, 0, 1, 2) == doctest::Approx(0.0));
    CHECK(insertion_detour(instance, 0, 1, 3) ==
          doctest::Approx(std::sqrt(2.0) + std::sqrt(2.0) - 2.0));

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coord(0.0, 50.0);
    for (int i = 0; i < 200; ++i) {
        const auto random = build_instance(
            Point(coord(rng), coord(rng)),
            {Point(coord(rng), coord(rng)), Point(coord(rng), coord(rng)),
             Point(coord(rng), coord(rng)), Point(coord(rng), coord(rng))},
            {pair_commodity(1, 1, 2), pair_commodity(2, 3, 4)});
        const double direct = (random.cost(1, 3) + random.cost(3, 2)) / random.cost(1, 2);
        CHECK(insertion_ratio(random, 1, 2, 3) == doctest::Approx(direct).epsilon(1e-12));
        CHECK(insertion_detour(random, 1, 2, 3) ==
              doctest::Approx(random.cost(1, 3) + random.cost(3, 2) - random.cost(1, 2))
                  .epsilon(1e-12));
    }
}

TEST_CASE("insertion ratio handles zero-length arcs") {
    const auto instance = build_instance(Point(0, 0), {Point(5, 5), Point(5, 5), Point(9, 0),
                                                       Point(2, 2)},
                                         {pair_commodity(1, 1, 2), pair_commodity(2, 3, 4)});
    // coincident endpoints, free detour
    CHECK(insertion_ratio(instance, 1, 2, 1) == 1.0);
    // coincident endpoints, real detour: enormous but finite ratio
    const double guarded = insertion_ratio(instance, 1, 2, 3);
    CHECK(guarded > 1e9);
    CHECK(std::isfinite(guarded));
}

TEST_CASE("subtour bookkeeping") {
    Subtour subtour(6, {0, 2, 5});
    CHECK(subtour.size() == 3);
    CHECK(subtour.num_arcs() == 2);
    CHECK(subtour.contains(2));
    CHECK(!subtour.contains(3));
    CHECK(subtour.position_of(5) == 2);
    CHECK(subtour.position_of(3) == -1);

    subtour.insert_at_arc(0, 3);
    CHECK(subtour.order() == std::vector<NodeId>{0, 3, 2, 5});
    CHECK(subtour.position_of(3) == 1);
    CHECK(subtour.position_of(2) == 2);
    CHECK(subtour.position_of(5) == 3);

    subtour.insert_at_arc(2, 4);
    CHECK(subtour.order() == std::vector<NodeId>{0, 3, 2, 4, 5});
    CHECK(subtour.position_of(4) == 3);

    CHECK_THROWS_AS(subtour.insert_at_arc(4, 1), DomainError);
    CHECK_THROWS_AS(subtour.insert_at_arc(0, 4), DomainError);
    CHECK_THROWS_AS(Subtour(6, {0, 2, 2}), DomainError);
}

TEST_CASE("feasible segment rules") {
    const auto instance = build_instance(
        Point(0, 0),
        {Point(1, 0), Point(2, 0), Point(3, 0), Point(4, 0), Point(5, 0), Point(6, 0),
         Point(7, 0), Point(8, 0)},
        {triple_commodity(1, 1, 2, 3), pair_commodity(2, 4, 5), pair_commodity(3, 6, 7)});
    const auto& prec = instance.precedence();

    // 9-position subtour with parents of node 3 at positions 2 and 5
    Subtour subtour(instance.num_nodes(), {0, 4, 1, 6, 7, 2, 8, 5, 9});
    const auto segment = feasible_segment(subtour, 3, prec);
    CHECK(segment.first == 5);
    CHECK(segment.last == 8);

    // independent check: exactly the arcs keeping every parent in front
    for (int arc = 0; arc < subtour.num_arcs(); ++arc) {
        bool all_parents_before = true;
        for (NodeId parent : prec.parents_of[3]) {
            if (subtour.position_of(parent) > arc) all_parents_before = false;
        }
        CHECK(segment.contains(arc) == all_parents_before);
    }

    // a parentless node can go anywhere
    Subtour fresh(instance.num_nodes(), {0, 1, 9});
    const auto anywhere = feasible_segment(fresh, 6, prec);
    CHECK(anywhere.first == 0);
    CHECK(anywhere.last == fresh.num_arcs());
    CHECK(anywhere.size() == 2);

    // a child with a missing parent cannot go anywhere
    CHECK(feasible_segment(fresh, 3, prec).empty());
    CHECK(feasible_segment(fresh, 5, prec).empty());
}

TEST_CASE("single-task line construction") {
    const auto instance = build_instance(Point(0, 0), {Point(2, 0), Point(1, 0)},
                                         {pair_commodity(1, 1, 2)});
    const auto result = achci_directional(instance, HullDirection::AsBuilt);
    CHECK(result.tour.order == std::vector<NodeId>{0, 1, 2, 3});
    CHECK(result.tour.cost == 4.0);
    CHECK(!result.depot_inserted_by_ratio);
    CHECK(result.insertions == 1);

    const auto both = achci(instance);
    CHECK(both.tour.cost == 4.0);
    CHECK(both.as_built_cost == both.reversed_cost);
    CHECK(both.tour.cost == std::min(both.as_built_cost, both.reversed_cost));

    const auto nn = nearest_neighbor(instance);
    CHECK(nn.order == std::vector<NodeId>{0, 1, 2, 3});
    CHECK(nn.cost == 4.0);
}

TEST_CASE("depot off the hull is spliced in at the cheapest arc") {
    // parents on a square around the depot, children retracing the depot area
    const auto instance = build_instance(
        Point(1, 0.2),
        {Point(-10, -10), Point(10, -10), Point(10, 10), Point(-10, 10), Point(0.5, 0.1),
         Point(-0.5, 0.3), Point(0.2, -0.4), Point(0.1, 0.5)},
        {pair_commodity(1, 1, 5), pair_commodity(2, 2, 6), pair_commodity(3, 3, 7),
         pair_commodity(4, 4, 8)});
    const auto result = achci_directional(instance, HullDirection::AsBuilt);
    CHECK(result.depot_inserted_by_ratio);
    CHECK(result.hull_nodes.size() == 4);
    CHECK(result.initial_order.front() == 0);
    CHECK(result.initial_order.back() == instance.end_depot());
    CHECK(result.initial_order.size() == 6);
    CHECK(validate_tour(instance, result.tour.order).feasible);
}

TEST_CASE("reversed direction mirrors the hull cycle") {
    std::mt19937_64 rng(13);
    const auto instance = random_instance(rng, 6, 1);
    const auto forward = achci_directional(instance, HullDirection::AsBuilt);
    auto mirrored = forward.hull_nodes;
    std::reverse(mirrored.begin(), mirrored.end());
    const auto backward = achci_directional(instance, HullDirection::Reversed);
    CHECK(backward.hull_nodes == mirrored);
}

TEST_CASE("hull members keep their cyclic order in the final tour") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 50; ++round) {
        const auto instance = random_instance(rng, 2 + static_cast<int>(rng() % 10),
                                              static_cast<int>(rng() % 2));
        for (auto direction : {HullDirection::AsBuilt, HullDirection::Reversed}) {
            const auto result = achci_directional(instance, direction);
            CHECK(restrict_to(result.tour.order, result.initial_order) == result.initial_order);
            CHECK(result.insertions ==
                  static_cast<int>(result.tour.order.size() - result.initial_order.size()));
        }
    }
}

TEST_CASE("construction is feasible on random instances") {
    std::mt19937_64 rng(19);
    for (int round = 0; round < 200; ++round) {
        const auto instance =
            random_instance(rng, 1 + static_cast<int>(rng() % 12), static_cast<int>(rng() % 3),
                            round % 2 == 0 ? Metric::Euc2dRounded : Metric::Euc2dContinuous);
        for (auto direction : {HullDirection::AsBuilt, HullDirection::Reversed}) {
            const auto result = achci_directional(instance, direction);
            const auto report = validate_tour(instance, result.tour.order);
            CHECK(report.feasible);
            CHECK(static_cast<int>(result.tour.order.size()) == instance.num_nodes());
        }
        const auto nn = nearest_neighbor(instance);
        CHECK(validate_tour(instance, nn.order).feasible);
    }
}

TEST_CASE("incremental candidate cache matches full rescan") {
    std::mt19937_64 rng(29);
    AchciOptions cached;
    AchciOptions rescan;
    rescan.incremental = false;
    for (int round = 0; round < 100; ++round) {
        const auto instance =
            random_instance(rng, 1 + static_cast<int>(rng() % 12), static_cast<int>(rng() % 3),
                            round % 2 == 0 ? Metric::Euc2dRounded : Metric::Euc2dContinuous);
        for (auto direction : {HullDirection::AsBuilt, HullDirection::Reversed}) {
            const auto fast = achci_directional(instance, direction, cached);
            const auto slow = achci_directional(instance, direction, rescan);
            CHECK(fast.tour.order == slow.tour.order);
            CHECK(fast.tour.cost == slow.tour.cost);
        }
    }
}

TEST_CASE("trace records one feasible insertion per step") {
    std::mt19937_64 rng(31);
    const auto instance = random_instance(rng, 8, 2);
    AchciOptions options;
    options.record_trace = true;
    const auto result = achci_directional(instance, HullDirection::AsBuilt, options);
    REQUIRE(static_cast<int>(result.trace.size()) == result.insertions);

    std::set<NodeId> placed(result.initial_order.begin(), result.initial_order.end());
    const auto& prec = instance.precedence();
    for (const auto& step : result.trace) {
        CHECK(std::isfinite(step.ratio));
        for (NodeId parent : prec.parents_of[static_cast<size_t>(step.node)]) {
            CHECK(placed.count(parent) == 1);
        }
        placed.insert(step.node);
    }
}

TEST_CASE("tour order is invariant under translation and scaling") {
    std::mt19937_64 rng(37);
    const auto instance = random_instance(rng, 7, 1);
    const auto base = achci(instance);
    const auto base_nn = nearest_neighbor(instance);

    const auto moved = shifted(instance, Point(137.0, -42.0), 1.0);
    CHECK(achci(moved).tour.order == base.tour.order);
    CHECK(nearest_neighbor(moved).order == base_nn.order);

    const auto scaled = shifted(instance, Point(0, 0), 2.5);
    CHECK(achci(scaled).tour.order == base.tour.order);
}

TEST_CASE("nearest neighbor prefers the smaller id on distance ties") {
    const auto instance = build_instance(
        Point(0, 0), {Point(0, 5), Point(0, 5), Point(3, 5), Point(3, 5)},
        {pair_commodity(1, 1, 3), pair_commodity(2, 2, 4)});
    const auto tour = nearest_neighbor(instance);
    CHECK(tour.order[1] == 1);
    CHECK(tour.order[2] == 2);
}

TEST_CASE("eil51 costs are near the published pair") {
    const auto cloud = load_tsplib_file(kDataDir / "eil51.tsp");
    const auto instance = generate(cloud, {Direction::ChildrenCentral});
    const auto nn = nearest_neighbor(instance);
    const auto hull_insertion = achci(instance);
    CHECK(nn.cost == doctest::Approx(583.0).epsilon(0.05));
    CHECK(hull_insertion.tour.cost == doctest::Approx(480.0).epsilon(0.05));
    CHECK(hull_insertion.tour.cost < nn.cost);
}

