#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tsppc/errors.hpp"
#include "tsppc/format.hpp"
#include "tsppc/geometry.hpp"
#include "tsppc/instance.hpp"
#include "tsppc/tour.hpp"

#include "support/builders.hpp"
#include "support/brute_force.hpp"
#include "support/hull_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace tsppc;
using namespace tsppc::testing;

namespace {

double polygon_area_twice(const std::vector<Point>& pts) {
    double total = 0.0;
    for (size_t i = 0; i < pts.size(); ++i) {
        const Point& a = pts[i];
        const Point& b = pts[(i + 1) % pts.size()];
        total += a.x() * b.y() - b.x() * a.y();
    }
    return total;
}

} // namespace

TEST_CASE("metric distances") {
    const Point a(0, 0);
    const Point b(3, 4);
    CHECK(metric_distance(a, b, Metric::Euc2dContinuous) == 5.0);
    CHECK(metric_distance(a, b, Metric::Euc2dRounded) == 5.0);

    // nearest-integer rounding
    CHECK(metric_distance(Point(0, 0), Point(1, 1), Metric::Euc2dRounded) == 1.0);
    CHECK(metric_distance(Point(0, 0), Point(0.5, 0), Metric::Euc2dRounded) == 1.0);
    CHECK(metric_distance(Point(0, 0), Point(0.4, 0), Metric::Euc2dRounded) == 0.0);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-50.0, 50.0);
    for (int i = 0; i < 100; ++i) {
        const Point p(coord(rng), coord(rng));
        const Point q(coord(rng), coord(rng));
        for (auto metric : {Metric::Euc2dRounded, Metric::Euc2dContinuous}) {
            CHECK(metric_distance(p, q, metric) == metric_distance(q, p, metric));
            CHECK(metric_distance(p, q, metric) >= 0.0);
        }
    }
    for (int i = 0; i < 1000; ++i) {
        const Point p(coord(rng), coord(rng));
        const Point q(coord(rng), coord(rng));
        const Point r(coord(rng), coord(rng));
        CHECK(metric_distance(p, r, Metric::Euc2dContinuous) <=
              metric_distance(p, q, Metric::Euc2dContinuous) +
                  metric_distance(q, r, Metric::Euc2dContinuous) + 1e-9);
    }
}

TEST_CASE("metric names round-trip") {
    for (auto metric : {Metric::Euc2dRounded, Metric::Euc2dContinuous}) {
        CHECK(metric_from_name(metric_name(metric)) == metric);
    }
    CHECK(metric_from_name("euc2d-rounded") == Metric::Euc2dRounded);
    CHECK(metric_from_name("euc2d-continuous") == Metric::Euc2dContinuous);
    CHECK(!metric_from_name("manhattan"));
}

TEST_CASE("instance cost accessor") {
    const auto instance = build_instance(Point(0, 0), {Point(3, 4)}, {});
    CHECK(instance.num_nodes() == 3);
    CHECK(instance.num_sites() == 1);
    CHECK(instance.cost(0, 1) == 5.0);
    CHECK(instance.cost(1, 1) == 0.0);
    CHECK(instance.cost(1, instance.start_depot()) == instance.cost(1, instance.end_depot()));
    CHECK_THROWS_AS((void)instance.cost(0, 3), DomainError);
    CHECK_THROWS_AS((void)instance.cost(-1, 0), DomainError);
}

TEST_CASE("instance validation rejects malformed data") {
    // depots must coincide
    {
        InstanceData data;
        data.points = {Point(0, 0), Point(1, 1), Point(2, 2), Point(5, 5)};
        CHECK_THROWS_AS(Instance(std::move(data)), ValidationError);
    }
    // a lone depot slot cannot stand in for both ends
    {
        InstanceData data;
        data.points = {Point(0, 0)};
        CHECK_THROWS_AS(Instance(std::move(data)), ValidationError);
    }
    // odd slot counts are fine: a three-node task group leaves one
    {
        InstanceData data;
        data.points = {Point(0, 0), Point(1, 1), Point(0, 0)};
        CHECK_NOTHROW(Instance(std::move(data)));
    }
    // payload at a depot slot
    {
        Commodity c;
        c.id = 1;
        c.payloads = {{0, 1.0}, {1, -1.0}};
        CHECK_THROWS_AS(build_instance(Point(0, 0), {Point(1, 0), Point(2, 0)}, {c}),
                        ValidationError);
    }
    // payloads must sum to zero
    {
        Commodity c;
        c.id = 1;
        c.payloads = {{1, 1.0}, {2, -2.0}};
        CHECK_THROWS_AS(build_instance(Point(0, 0), {Point(1, 0), Point(2, 0)}, {c}),
                        ValidationError);
    }
    // a node may not be pickup and delivery at once
    {
        const auto c1 = pair_commodity(1, 1, 2);
        const auto c2 = pair_commodity(2, 2, 3);
        CHECK_THROWS_AS(
            build_instance(Point(0, 0), {Point(1, 0), Point(2, 0), Point(3, 0), Point(4, 0)},
                           {c1, c2}),
            ValidationError);
    }
    // duplicate commodity ids
    {
        const auto c1 = pair_commodity(1, 1, 2);
        const auto c2 = pair_commodity(1, 3, 4);
        CHECK_THROWS_AS(
            build_instance(Point(0, 0), {Point(1, 0), Point(2, 0), Point(3, 0), Point(4, 0)},
                           {c1, c2}),
            ValidationError);
    }
}

TEST_CASE("precedence derivation") {
    const auto instance =
        build_instance(Point(0, 0), {Point(1, 0), Point(2, 0), Point(3, 0), Point(4, 0),
                                     Point(5, 0)},
                       {triple_commodity(1, 1, 2, 3), pair_commodity(2, 4, 5)});
    const auto& prec = instance.precedence();
    CHECK(prec.parents_of[3] == std::vector<NodeId>{1, 2});
    CHECK(prec.children_of[1] == std::vector<NodeId>{3});
    CHECK(prec.children_of[2] == std::vector<NodeId>{3});
    CHECK(prec.parents_of[5] == std::vector<NodeId>{4});
    CHECK(prec.parent_nodes == std::vector<NodeId>{1, 2, 4});
    CHECK(prec.child_nodes == std::vector<NodeId>{3, 5});
    CHECK(prec.is_parent(1));
    CHECK(!prec.is_parent(3));
    CHECK(prec.is_child(5));
}

TEST_CASE("tour cost on a line") {
    const auto instance = build_instance(Point(0, 0), {Point(1, 0), Point(2, 0)},
                                         {pair_commodity(1, 1, 2)});
    const std::vector<NodeId> order{0, 1, 2, 3};
    CHECK(tour_cost(instance, order) == 4.0);
}

TEST_CASE("tour cost of the empty instance") {
    const auto instance = build_instance(Point(3, 3), {}, {});
    const std::vector<NodeId> order{0, 1};
    CHECK(tour_cost(instance, order) == 0.0);
}

TEST_CASE("tour cost matches independent accumulation") {
    std::mt19937_64 rng(11);
    const auto instance = random_instance(rng, 3, 0);
    std::vector<NodeId> order{0, 1, 2, 3, 4, 5, 6, 7};
    std::shuffle(order.begin() + 1, order.end() - 1, rng);
    double expected = 0.0;
    for (size_t i = 0; i + 1 < order.size(); ++i) {
        expected += metric_distance(instance.point(order[i]), instance.point(order[i + 1]),
                                    instance.metric());
    }
    CHECK(tour_cost(instance, order) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("tour cost rejects malformed orders") {
    const auto instance = build_instance(Point(0, 0), {Point(1, 0), Point(2, 0)},
                                         {pair_commodity(1, 1, 2)});
    CHECK_THROWS_AS((void)tour_cost(instance, std::vector<NodeId>{0, 1, 1, 3}), ValidationError);
    CHECK_THROWS_AS((void)tour_cost(instance, std::vector<NodeId>{0, 1, 9, 3}), ValidationError);
    CHECK_THROWS_AS((void)tour_cost(instance, std::vector<NodeId>{1, 0, 2, 3}), ValidationError);
    CHECK_THROWS_AS((void)tour_cost(instance, std::vector<NodeId>{0, 1, 3}), ValidationError);
}

TEST_CASE("validate_tour basics") {
    const auto instance = build_instance(Point(0, 0), {Point(1, 0), Point(2, 0)},
                                         {pair_commodity(1, 1, 2)});
    const auto good = validate_tour(instance, std::vector<NodeId>{0, 1, 2, 3});
    CHECK(good.feasible);
    CHECK(good.max_payload == 1.0);
    CHECK(good.payload_returns_to_zero);

    const auto bad = validate_tour(instance, std::vector<NodeId>{0, 2, 1, 3});
    CHECK(!bad.feasible);
    CHECK(bad.error == TourError::PrecedenceViolated);
    CHECK(bad.violating_node == 2);
    CHECK(bad.violating_commodity == 1);

    const auto structural = validate_tour(instance, std::vector<NodeId>{0, 1, 3});
    CHECK(!structural.feasible);
    CHECK(structural.error == TourError::BadStructure);
}

TEST_CASE("validate_tour agrees with position-based check on all orders") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 5; ++round) {
        const auto instance = round % 2 == 0 ? random_instance(rng, 2, 0)
                                             : random_instance(rng, 0, 1);
        for (const auto& order : all_orders(instance)) {
            const bool simulated = validate_tour(instance, order).feasible;
            const bool positional = parents_precede_children(instance, order);
            CHECK(simulated == positional);
        }
    }
}

TEST_CASE("two-parent child needs both parents first") {
    const auto instance = build_instance(
        Point(0, 0), {Point(1, 0), Point(2, 0), Point(3, 0)}, {triple_commodity(1, 1, 2, 3)});
    CHECK(validate_tour(instance, std::vector<NodeId>{0, 1, 2, 3, 4}).feasible);
    CHECK(validate_tour(instance, std::vector<NodeId>{0, 2, 1, 3, 4}).feasible);
    CHECK(!validate_tour(instance, std::vector<NodeId>{0, 1, 3, 2, 4}).feasible);
    const auto report = validate_tour(instance, std::vector<NodeId>{0, 1, 3, 2, 4});
    CHECK(report.violating_node == 3);
}

TEST_CASE("convex hull of simple shapes") {
    const std::vector<Point> square{Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1),
                                    Point(0.5, 0.5)};
    const auto hull = convex_hull(square);
    CHECK(hull == std::vector<int>{0, 1, 2, 3});

    const std::vector<Point> triangle{Point(0, 0), Point(4, 0), Point(1, 3)};
    const auto tri_hull = convex_hull(triangle);
    CHECK(tri_hull.size() == 3);
    std::vector<Point> tri_pts;
    for (int i : tri_hull) tri_pts.push_back(triangle[static_cast<size_t>(i)]);
    CHECK(polygon_area_twice(tri_pts) > 0.0); // counterclockwise

    const std::vector<Point> collinear{Point(0, 0), Point(1, 0), Point(2, 0), Point(3, 0)};
    CHECK(convex_hull(collinear) == std::vector<int>{0, 3});

    const std::vector<Point> coincident{Point(1, 1), Point(1, 1), Point(0, 0), Point(2, 0)};
    const auto dedup_hull = convex_hull(coincident);
    const std::set<int> dedup_set(dedup_hull.begin(), dedup_hull.end());
    CHECK(dedup_set == std::set<int>{0, 2, 3});

    CHECK_THROWS_AS((void)convex_hull(std::vector<Point>{}), DomainError);
}

TEST_CASE("collinear boundary points are not hull vertices") {
    const std::vector<Point> pts{Point(0, 0), Point(2, 0), Point(2, 2), Point(0, 2),
                                 Point(1, 0), Point(2, 1)};
    const auto hull = convex_hull(pts);
    CHECK(hull == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("convex hull matches all-pairs oracle on random points") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> coord(0.0, 10.0);
    for (int round = 0; round < 10; ++round) {
        std::vector<Point> pts;
        for (int i = 0; i < 50; ++i) pts.emplace_back(coord(rng), coord(rng));
        const auto hull = convex_hull(pts);
        const std::set<int> got(hull.begin(), hull.end());
        CHECK(got == hull_vertices_oracle(pts));

        std::vector<Point> hull_pts;
        for (int i : hull) hull_pts.push_back(pts[static_cast<size_t>(i)]);
        CHECK(polygon_area_twice(hull_pts) > 0.0);

        // every point sits inside or on the hull polygon
        for (const auto& p : pts) {
            bool inside = true;
            for (size_t e = 0; e < hull_pts.size(); ++e) {
                const Point& a = hull_pts[e];
                const Point& b = hull_pts[(e + 1) % hull_pts.size()];
                const double cross =
                    (b.x() - a.x()) * (p.y() - a.y()) - (b.y() - a.y()) * (p.x() - a.x());
                if (cross < -1e-9) inside = false;
            }
            CHECK(inside);
        }
    }
}

TEST_CASE("convex hull is rotation of itself under input permutation") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> coord(0.0, 10.0);
    std::vector<Point> pts;
    for (int i = 0; i < 30; ++i) pts.emplace_back(coord(rng), coord(rng));
    const auto hull = convex_hull(pts);

    std::vector<int> shuffle_map(pts.size());
    std::iota(shuffle_map.begin(), shuffle_map.end(), 0);
    std::shuffle(shuffle_map.begin(), shuffle_map.end(), rng);
    std::vector<Point> shuffled(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        shuffled[static_cast<size_t>(shuffle_map[i])] = pts[i];
    }
    auto other = convex_hull(shuffled);
    for (int& idx : other) {
        // translate back to original indexing
        const auto it = std::find(shuffle_map.begin(), shuffle_map.end(), idx);
        idx = static_cast<int>(it - shuffle_map.begin());
    }
    REQUIRE(other.size() == hull.size());
    const auto rotation = std::find(other.begin(), other.end(), hull.front());
    REQUIRE(rotation != other.end());
    std::rotate(other.begin(), rotation, other.end());
    CHECK(other == hull);
}

TEST_CASE("bounding box diagonal and centroid") {
    const std::vector<Point> pts{Point(0, 0), Point(3, 4), Point(1, 1)};
    CHECK(bounding_box_diagonal(pts) == 5.0);
    const Point c = centroid(pts);
    CHECK(c.x() == doctest::Approx(4.0 / 3.0));
    CHECK(c.y() == doctest::Approx(5.0 / 3.0));
    CHECK(bounding_box_diagonal(std::vector<Point>{Point(2, 2)}) == 0.0);
}

TEST_CASE("shortest round-trip double formatting") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> value(-1e6, 1e6);
    for (int i = 0; i < 200; ++i) {
        const double x = value(rng);
        CHECK(parse_double(format_double(x)) == x);
    }
    CHECK(format_double(37.0) == "37");
    CHECK(parse_double("1.5e3") == 1500.0);
    CHECK(parse_double("+7") == 7.0);
    CHECK(!parse_double("1.5x"));
    CHECK(!parse_double(""));
    CHECK(format_scientific(583.2, 3) == "5.83e+02");
}

