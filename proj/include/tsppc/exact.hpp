#pragma once

#include "tsppc/instance.hpp"
#include "tsppc/tour.hpp"

namespace tsppc {

struct ExactResult {
    Tour tour;
    bool optimal = false;
};

// Provably optimal tour by dynamic programming over precedence-closed site
// subsets. State is (visited set, last site); a site enters only when all of
// its parents are in the set. Rejects instances with more than node_limit
// sites (the table has 2^sites rows).
ExactResult exact_oracle(const Instance& instance, int node_limit = 20);

} // namespace tsppc
