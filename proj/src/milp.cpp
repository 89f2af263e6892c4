#include "tsppc/milp.hpp"

#include "tsppc/errors.hpp"
#include "tsppc/format.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <set>

namespace tsppc {

namespace {

std::string xv(NodeId i, NodeId j) {
    return "x_" + std::to_string(i) + "_" + std::to_string(j);
}
std::string yv(NodeId i, int m) { return "y_" + std::to_string(i) + "_" + std::to_string(m); }
std::string lv(NodeId i, NodeId j, int m) {
    return "l_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(m);
}
std::string uv(NodeId i) { return "u_" + std::to_string(i); }

// Arcs that can appear in a feasible tour: depot to parentless sites, any
// ordered site pair, childless sites to the end depot.
std::vector<std::pair<NodeId, NodeId>> build_arcs(const Instance& instance) {
    std::vector<std::pair<NodeId, NodeId>> arcs;
    const int sites = instance.num_sites();
    const auto& prec = instance.precedence();
    for (NodeId j = 1; j <= sites; ++j) {
        if (prec.parents_of[static_cast<size_t>(j)].empty()) arcs.emplace_back(0, j);
    }
    for (NodeId i = 1; i <= sites; ++i) {
        for (NodeId j = 1; j <= sites; ++j) {
            if (i != j) arcs.emplace_back(i, j);
        }
    }
    for (NodeId i = 1; i <= sites; ++i) {
        if (prec.children_of[static_cast<size_t>(i)].empty()) {
            arcs.emplace_back(i, instance.end_depot());
        }
    }
    return arcs;
}

// Nodes after which a commodity's level is zero in every feasible tour:
// the start depot, plus the delivery node of single-delivery commodities.
std::set<NodeId> statically_empty_after(const Commodity& commodity) {
    std::set<NodeId> zero{0};
    NodeId delivery = -1;
    int negatives = 0;
    for (const auto& [node, q] : commodity.payloads) {
        if (q < 0) {
            ++negatives;
            delivery = node;
        }
    }
    if (negatives == 1) zero.insert(delivery);
    return zero;
}

} // namespace

double big_m_for(const Instance& instance) {
    double peak = 0.0;
    for (const auto& commodity : instance.commodities()) {
        peak = std::max(peak, commodity.total_positive_payload());
    }
    return std::max(3.0, peak + 1.0);
}

MilpModel build_milp(const Instance& instance, const MilpOptions& options) {
    const int sites = instance.num_sites();
    if (sites == 0) throw DomainError("cannot build a model for an instance without sites");
    if (options.subtour == SubtourMode::DfjFull && sites > options.dfj_site_cap) {
        throw SizeError("subset enumeration over " + std::to_string(sites) +
                        " sites exceeds the cap of " + std::to_string(options.dfj_site_cap) +
                        "; use the ordering-variable mode");
    }

    MilpModel model;
    model.instance_name = instance.name();
    model.big_m = big_m_for(instance);
    model.subtour = options.subtour;
    model.sparse_lambda = options.sparse_lambda;

    const NodeId end = instance.end_depot();
    const auto arcs = build_arcs(instance);
    const auto& commodities = instance.commodities();
    const double M = model.big_m;

    model.comments.push_back("TSP-PC arc model for instance " + instance.name());
    model.comments.push_back("metric: " + std::string(metric_name(instance.metric())));
    model.comments.push_back("sites: " + std::to_string(sites) +
                             "  commodities: " + std::to_string(commodities.size()));
    model.comments.push_back("big_m: " + format_double(M));
    model.comments.push_back(options.subtour == SubtourMode::DfjFull
                                 ? "subtour_mode: dfj_full"
                                 : "subtour_mode: mtz");
    model.comments.push_back(options.sparse_lambda
                                 ? "lambda: sparse (products fixed at zero omitted)"
                                 : "lambda: full");

    auto add_var = [&](MilpVar var) {
        model.var_names.insert(var.name);
        model.vars.push_back(std::move(var));
    };

    for (const auto& [i, j] : arcs) {
        add_var({xv(i, j), true, true, 0.0, true, 1.0});
        model.objective.push_back({xv(i, j), instance.cost(i, j)});
    }
    for (NodeId i = 0; i <= sites; ++i) {
        for (const auto& commodity : commodities) add_var({yv(i, commodity.id)});
    }
    for (const auto& commodity : commodities) add_var({yv(end, commodity.id)});

    std::vector<std::set<NodeId>> zero_after;
    for (const auto& commodity : commodities) {
        zero_after.push_back(statically_empty_after(commodity));
    }
    auto lambda_exists = [&](NodeId i, size_t c) {
        return !options.sparse_lambda || zero_after[c].count(i) == 0;
    };
    for (const auto& [i, j] : arcs) {
        for (size_t c = 0; c < commodities.size(); ++c) {
            if (lambda_exists(i, c)) add_var({lv(i, j, commodities[c].id)});
        }
    }
    if (options.subtour == SubtourMode::Mtz) {
        for (NodeId i = 1; i <= sites; ++i) {
            add_var({uv(i), false, true, 1.0, true, static_cast<double>(sites)});
        }
    }

    auto add_row = [&](MilpRow row) {
        if (!row.terms.empty()) model.rows.push_back(std::move(row));
    };

    // Degree structure: one arc out of every site and the start depot, one
    // arc into every site and the end depot.
    for (NodeId i = 1; i <= sites; ++i) {
        MilpRow row{"out_" + std::to_string(i), {}, '=', 1.0};
        for (const auto& [a, b] : arcs) {
            if (a == i) row.terms.push_back({xv(a, b), 1.0});
        }
        add_row(std::move(row));
    }
    for (NodeId j = 1; j <= sites; ++j) {
        MilpRow row{"in_" + std::to_string(j), {}, '=', 1.0};
        for (const auto& [a, b] : arcs) {
            if (b == j) row.terms.push_back({xv(a, b), 1.0});
        }
        add_row(std::move(row));
    }
    {
        MilpRow row{"depot_out", {}, '=', 1.0};
        for (const auto& [a, b] : arcs) {
            if (a == 0) row.terms.push_back({xv(a, b), 1.0});
        }
        add_row(std::move(row));
        MilpRow end_row{"end_in", {}, '=', 1.0};
        for (const auto& [a, b] : arcs) {
            if (b == end) end_row.terms.push_back({xv(a, b), 1.0});
        }
        add_row(std::move(end_row));
    }
    // Redundant given the degree rows, kept so every visited site is also left.
    for (NodeId k = 1; k <= sites; ++k) {
        MilpRow row{"flow_" + std::to_string(k), {}, '=', 0.0};
        for (const auto& [a, b] : arcs) {
            if (b == k) row.terms.push_back({xv(a, b), 1.0});
            if (a == k) row.terms.push_back({xv(a, b), -1.0});
        }
        add_row(std::move(row));
    }

    // Payload propagation: the level after j equals the level carried over
    // the single used incoming arc plus j's own pickup or delivery.
    for (const auto& commodity : commodities) {
        add_row({"start_" + std::to_string(commodity.id), {{yv(0, commodity.id), 1.0}}, '=', 0.0});
    }
    for (size_t c = 0; c < commodities.size(); ++c) {
        const auto& commodity = commodities[c];
        for (NodeId j = 1; j <= sites + 1; ++j) {
            const NodeId node = j == sites + 1 ? end : j;
            MilpRow row{"pay_" + std::to_string(node) + "_" + std::to_string(commodity.id),
                        {},
                        '=',
                        -commodity.payload_at(node)};
            for (const auto& [a, b] : arcs) {
                if (b == node && lambda_exists(a, c)) {
                    row.terms.push_back({lv(a, b, commodity.id), 1.0});
                }
            }
            row.terms.push_back({yv(node, commodity.id), -1.0});
            add_row(std::move(row));
        }
    }

    // Product linearization for lambda = x * y.
    for (const auto& [i, j] : arcs) {
        for (size_t c = 0; c < commodities.size(); ++c) {
            if (!lambda_exists(i, c)) continue;
            const int m = commodities[c].id;
            add_row({"lxm_" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                         std::to_string(m),
                     {{lv(i, j, m), 1.0}, {xv(i, j), -M}},
                     '<',
                     0.0});
            add_row({"lyb_" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                         std::to_string(m),
                     {{lv(i, j, m), 1.0}, {yv(i, m), -1.0}},
                     '<',
                     0.0});
            add_row({"lge_" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                         std::to_string(m),
                     {{lv(i, j, m), 1.0}, {yv(i, m), -1.0}, {xv(i, j), -M}},
                     '>',
                     -M});
        }
    }

    if (options.subtour == SubtourMode::DfjFull) {
        const uint32_t full = (uint32_t{1} << sites) - 1;
        for (uint32_t mask = 1; mask < full; ++mask) {
            const int size = std::popcount(mask);
            if (size < 2) continue;
            MilpRow row{"dfj_" + std::to_string(mask), {}, '<', static_cast<double>(size - 1)};
            for (NodeId i = 1; i <= sites; ++i) {
                if (!(mask & (uint32_t{1} << (i - 1)))) continue;
                for (NodeId j = 1; j <= sites; ++j) {
                    if (i == j || !(mask & (uint32_t{1} << (j - 1)))) continue;
                    row.terms.push_back({xv(i, j), 1.0});
                }
            }
            add_row(std::move(row));
        }
    } else {
        for (NodeId i = 1; i <= sites; ++i) {
            for (NodeId j = 1; j <= sites; ++j) {
                if (i == j) continue;
                add_row({"mtz_" + std::to_string(i) + "_" + std::to_string(j),
                         {{uv(i), 1.0}, {uv(j), -1.0}, {xv(i, j), static_cast<double>(sites)}},
                         '<',
                         static_cast<double>(sites - 1)});
            }
        }
    }

    return model;
}

void write_lp(const MilpModel& model, std::ostream& out) {
    for (const auto& comment : model.comments) out << "\\ " << comment << "\n";
    out << "Minimize\n";

    auto write_terms = [&](const std::vector<MilpTerm>& terms) {
        std::string line = "  ";
        bool first = true;
        for (const auto& term : terms) {
            const std::string piece = (term.coef < 0 ? "- " : (first ? "" : "+ ")) +
                                      format_double(std::abs(term.coef)) + " " + term.var;
            first = false;
            if (line.size() > 2 && line.size() + piece.size() + 1 > 200) {
                out << line << "\n";
                line = "  ";
            }
            if (line.size() > 2) line += " ";
            line += piece;
        }
        out << line << "\n";
    };

    out << " obj:\n";
    write_terms(model.objective);

    out << "Subject To\n";
    for (const auto& row : model.rows) {
        out << " " << row.name << ":\n";
        write_terms(row.terms);
        const char* rel = row.relation == '<' ? "<=" : row.relation == '>' ? ">=" : "=";
        out << "   " << rel << " " << format_double(row.rhs) << "\n";
    }

    out << "Bounds\n";
    for (const auto& var : model.vars) {
        if (var.binary) continue;
        if (var.has_ub) {
            out << " " << format_double(var.lb) << " <= " << var.name
                << " <= " << format_double(var.ub) << "\n";
        }
        // default 0 <= v < +inf needs no entry
    }

    out << "Binary\n";
    std::string line(" ");
    for (const auto& var : model.vars) {
        if (!var.binary) continue;
        if (line.size() + var.name.size() + 1 > 200) {
            out << line << "\n";
            line = " ";
        }
        line += " " + var.name;
    }
    if (line.size() > 1) out << line << "\n";
    out << "End\n";
}

std::vector<std::pair<std::string, double>> milp_warm_start(const MilpModel& model,
                                                            const Instance& instance,
                                                            const Tour& tour) {
    const auto report = validate_tour(instance, tour.order);
    if (!report.feasible) {
        throw ValidationError("warm start tour is infeasible: " + report.message);
    }

    std::vector<std::pair<std::string, double>> assignment;
    const auto& commodities = instance.commodities();

    // Levels after each visited node, for y and the per-arc products.
    std::vector<double> level(commodities.size(), 0.0);
    std::vector<std::vector<double>> level_after(tour.order.size());
    for (size_t t = 0; t < tour.order.size(); ++t) {
        for (size_t c = 0; c < commodities.size(); ++c) {
            level[c] += commodities[c].payload_at(tour.order[t]);
        }
        level_after[t] = level;
    }

    for (size_t t = 0; t + 1 < tour.order.size(); ++t) {
        const NodeId a = tour.order[t];
        const NodeId b = tour.order[t + 1];
        const auto x_name = xv(a, b);
        if (!model.has_var(x_name)) {
            throw ValidationError("tour uses arc " + x_name + " absent from the model");
        }
        assignment.emplace_back(x_name, 1.0);
        for (size_t c = 0; c < commodities.size(); ++c) {
            const double carried = level_after[t][c];
            if (carried == 0.0) continue;
            const auto l_name = lv(a, b, commodities[c].id);
            if (!model.has_var(l_name)) {
                throw ValidationError("nonzero product for pruned variable " + l_name);
            }
            assignment.emplace_back(l_name, carried);
        }
    }
    for (size_t t = 0; t < tour.order.size(); ++t) {
        for (size_t c = 0; c < commodities.size(); ++c) {
            if (level_after[t][c] != 0.0) {
                assignment.emplace_back(yv(tour.order[t], commodities[c].id), level_after[t][c]);
            }
        }
    }
    if (model.subtour == SubtourMode::Mtz) {
        for (size_t t = 1; t + 1 < tour.order.size(); ++t) {
            assignment.emplace_back(uv(tour.order[t]), static_cast<double>(t));
        }
    }
    return assignment;
}

void write_mst(const std::vector<std::pair<std::string, double>>& assignment, std::ostream& out) {
    out << "# variable start values; unlisted variables are 0\n";
    for (const auto& [name, value] : assignment) {
        out << name << " " << format_double(value) << "\n";
    }
}

} // namespace tsppc
