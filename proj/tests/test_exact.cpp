#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tsppc/achci.hpp"
#include "tsppc/errors.hpp"
#include "tsppc/exact.hpp"
#include "tsppc/nearest_neighbor.hpp"

#include "support/builders.hpp"
#include "support/brute_force.hpp"

#include <algorithm>
#include <limits>
#include <random>

using namespace tsppc;
using namespace tsppc::testing;

TEST_CASE("single-task line has a unique optimum") {
    const auto instance = build_instance(Point(0, 0), {Point(2, 0), Point(1, 0)},
                                         {pair_commodity(1, 1, 2)});
    const auto result = exact_oracle(instance);
    CHECK(result.optimal);
    CHECK(result.tour.order == std::vector<NodeId>{0, 1, 2, 3});
    CHECK(result.tour.cost == 4.0);
}

TEST_CASE("empty instance is the depot loop") {
    const auto instance = build_instance(Point(3, 4), {}, {});
    const auto result = exact_oracle(instance);
    CHECK(result.tour.order == std::vector<NodeId>{0, 1});
    CHECK(result.tour.cost == 0.0);
}

TEST_CASE("enumeration filters exactly the precedence-feasible orders") {
    // cross-check the depth-first enumerator against next_permutation
    std::mt19937_64 rng(3);
    const auto instance = random_instance(rng, 1, 1);
    long long feasible = 0;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& order : all_orders(instance)) {
        if (!parents_precede_children(instance, order)) continue;
        ++feasible;
        best = std::min(best, tour_cost(instance, order));
    }
    const auto dfs = brute_force_best(instance);
    CHECK(dfs.feasible_orders == feasible);
    CHECK(dfs.best_cost == best);
    CHECK(feasible > 0);
}

TEST_CASE("matches exhaustive search on random instances") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 120; ++round) {
        const int pairs = 1 + static_cast<int>(rng() % 3);
        const int triples = static_cast<int>(rng() % 2);
        const auto instance =
            random_instance(rng, pairs, triples,
                            round % 3 == 0 ? Metric::Euc2dRounded : Metric::Euc2dContinuous);
        const auto oracle = exact_oracle(instance);
        const auto brute = brute_force_best(instance);
        REQUIRE(oracle.optimal);
        CHECK(oracle.tour.cost == brute.best_cost);
        CHECK(validate_tour(instance, oracle.tour.order).feasible);
        CHECK(tour_cost(instance, oracle.tour.order) == oracle.tour.cost);
    }
}

TEST_CASE("never beaten by the constructive heuristics") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 60; ++round) {
        const auto instance = random_instance(rng, 1 + static_cast<int>(rng() % 3),
                                              static_cast<int>(rng() % 2));
        const auto oracle = exact_oracle(instance);
        CHECK(nearest_neighbor(instance).cost >= oracle.tour.cost);
        CHECK(achci(instance).tour.cost >= oracle.tour.cost);
    }
}

TEST_CASE("deterministic across repeated runs") {
    std::mt19937_64 rng(13);
    const auto instance = random_instance(rng, 3, 1);
    const auto first = exact_oracle(instance);
    const auto second = exact_oracle(instance);
    CHECK(first.tour.order == second.tour.order);
    CHECK(first.tour.cost == second.tour.cost);
}

TEST_CASE("site limit guards the table size") {
    std::mt19937_64 rng(17);
    const auto instance = random_instance(rng, 4, 0); // 8 sites
    CHECK_THROWS_AS(exact_oracle(instance, 7), SizeError);
    CHECK_NOTHROW(exact_oracle(instance, 8));
}
