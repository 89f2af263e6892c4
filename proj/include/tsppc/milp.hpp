#pragma once

#include "tsppc/instance.hpp"
#include "tsppc/tour.hpp"

#include <iosfwd>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace tsppc {

enum class SubtourMode {
    DfjFull, // one cut per site subset; exponential, capped by dfj_site_cap
    Mtz,     // ordering variables u_i
};

struct MilpOptions {
    SubtourMode subtour = SubtourMode::DfjFull;
    bool sparse_lambda = false; // drop product variables that are fixed at zero
    int dfj_site_cap = 16;
};

struct MilpTerm {
    std::string var;
    double coef = 0.0;
};

struct MilpRow {
    std::string name;
    std::vector<MilpTerm> terms;
    char relation = '='; // '<' means <=, '>' means >=
    double rhs = 0.0;
};

struct MilpVar {
    std::string name;
    bool binary = false;
    bool has_lb = true; // lb 0 unless overridden
    double lb = 0.0;
    bool has_ub = false;
    double ub = 0.0;
};

struct MilpModel {
    std::string instance_name;
    std::vector<std::string> comments;
    std::vector<MilpTerm> objective;
    std::vector<MilpRow> rows;
    std::vector<MilpVar> vars;
    std::unordered_set<std::string> var_names;
    double big_m = 0.0;
    SubtourMode subtour = SubtourMode::DfjFull;
    bool sparse_lambda = false;

    bool has_var(const std::string& name) const { return var_names.count(name) > 0; }
};

// Smallest safe linearization constant: one more than the largest level any
// single commodity can reach, never below 3.
double big_m_for(const Instance& instance);

// Builds the arc-based model: binary arc variables, degree and flow rows,
// per-commodity payload propagation linearized through per-arc product
// variables, and the chosen subtour-elimination family. DfjFull beyond
// dfj_site_cap sites raises SizeError.
MilpModel build_milp(const Instance& instance, const MilpOptions& options = {});

// CPLEX-style LP text; header comments record metric, big M, and the
// subtour mode.
void write_lp(const MilpModel& model, std::ostream& out);

// Variable assignment matching a feasible tour: arc variables on the tour,
// payload levels from simulation, product variables as their implied values,
// ordering variables in Mtz mode. Only nonzero variables are listed; all
// others are zero. Rejects tours that fail validation.
std::vector<std::pair<std::string, double>> milp_warm_start(const MilpModel& model,
                                                            const Instance& instance,
                                                            const Tour& tour);

void write_mst(const std::vector<std::pair<std::string, double>>& assignment, std::ostream& out);

} // namespace tsppc
