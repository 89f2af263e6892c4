#include "tsppc/achci.hpp"
#include "tsppc/bench.hpp"
#include "tsppc/errors.hpp"
#include "tsppc/exact.hpp"
#include "tsppc/format.hpp"
#include "tsppc/generator.hpp"
#include "tsppc/milp.hpp"
#include "tsppc/nearest_neighbor.hpp"
#include "tsppc/tsplib.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace tsppc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

Metric metric_flag(const std::string& name) {
    const auto metric = metric_from_name(name);
    if (!metric) throw CLI::ValidationError("--metric", "unknown metric '" + name + "'");
    return *metric;
}

fs::path tour_path_for(const fs::path& base, const std::string& method) {
    fs::path path = base;
    const std::string stem = path.stem().string();
    const std::string ext = path.has_extension() ? path.extension().string() : ".tour";
    path.replace_filename(stem + "." + method + ext);
    return path;
}

struct GenArgs {
    std::string tsplib;
    std::string direction;
    std::string metric = "euc2d-rounded";
    std::string out;
};

struct SolveArgs {
    std::string instance;
    std::string method = "both";
    std::string tour_out;
};

struct ExactArgs {
    std::string instance;
    int limit = 20;
    std::string tour_out;
};

struct MilpArgs {
    std::string instance;
    std::string warm_start;
    std::string out;
    bool mtz = false;
    bool sparse_lambda = false;
    int dfj_cap = 16;
};

struct ValidateArgs {
    std::string instance;
    std::string tour;
};

struct BenchArgs {
    std::string tsplib_dir;
    std::string directions = "both";
    std::string metric = "euc2d-rounded";
    std::string out;
    std::string timing_out;
    std::vector<int> timing_sizes = {51, 100, 200, 400, 800};
    int workers = 0;
    bool paper_format = false;
};

int run_gen(const GenArgs& args) {
    const auto cloud = load_tsplib_file(args.tsplib);
    const auto direction = direction_from_name(args.direction);
    if (!direction) {
        std::cerr << "unknown direction '" << args.direction << "'\n";
        return kExitUsage;
    }
    const Instance instance = generate(cloud, {*direction, TieBreak::StableFileOrder,
                                               metric_flag(args.metric)});
    save_instance_file(instance, args.out);
    std::cout << "wrote " << args.out << " (" << instance.num_sites() << " sites, "
              << instance.commodities().size() << " commodities)\n";
    return kExitOk;
}

int run_solve(const SolveArgs& args) {
    const Instance instance = load_instance_file(args.instance);
    const bool want_nn = args.method == "nn" || args.method == "both";
    const bool want_achci = args.method == "achci" || args.method == "both";
    if (!want_nn && !want_achci) {
        std::cerr << "unknown method '" << args.method << "'\n";
        return kExitUsage;
    }

    if (want_nn) {
        const Tour tour = nearest_neighbor(instance);
        std::cout << "nn " << format_double(tour.cost) << "\n";
        if (!args.tour_out.empty()) {
            const auto path = args.method == "both" ? tour_path_for(args.tour_out, "nn")
                                                    : fs::path(args.tour_out);
            save_tour_file(tour, instance, "nn", path);
        }
    }
    if (want_achci) {
        const AchciResult result = achci(instance);
        std::cout << "achci " << format_double(result.tour.cost)
                  << " as_built=" << format_double(result.as_built_cost)
                  << " reversed=" << format_double(result.reversed_cost) << "\n";
        if (!args.tour_out.empty()) {
            const auto path = args.method == "both" ? tour_path_for(args.tour_out, "achci")
                                                    : fs::path(args.tour_out);
            save_tour_file(result.tour, instance, "achci", path);
        }
    }
    return kExitOk;
}

int run_exact(const ExactArgs& args) {
    const Instance instance = load_instance_file(args.instance);
    const ExactResult result = exact_oracle(instance, args.limit);
    std::cout << "exact " << format_double(result.tour.cost)
              << (result.optimal ? " optimal" : "") << "\n";
    if (!args.tour_out.empty()) save_tour_file(result.tour, instance, "exact", args.tour_out);
    return kExitOk;
}

int run_export_milp(const MilpArgs& args) {
    const Instance instance = load_instance_file(args.instance);
    MilpOptions options;
    options.subtour = args.mtz ? SubtourMode::Mtz : SubtourMode::DfjFull;
    options.sparse_lambda = args.sparse_lambda;
    options.dfj_site_cap = args.dfj_cap;
    const MilpModel model = build_milp(instance, options);

    std::ofstream out(args.out);
    if (!out) throw ParseError("cannot open " + args.out + " for writing");
    write_lp(model, out);
    std::cout << "wrote " << args.out << " (" << model.vars.size() << " variables, "
              << model.rows.size() << " rows)\n";

    if (!args.warm_start.empty()) {
        const TourFile tour_file = load_tour_file(args.warm_start);
        Tour tour;
        tour.order = tour_file.order;
        tour.cost = tour_cost(instance, tour.order);
        const auto assignment = milp_warm_start(model, instance, tour);
        fs::path mst_path(args.out);
        mst_path.replace_extension(".mst");
        std::ofstream mst(mst_path);
        if (!mst) throw ParseError("cannot open " + mst_path.string() + " for writing");
        write_mst(assignment, mst);
        std::cout << "wrote " << mst_path.string() << " (" << assignment.size()
                  << " start values)\n";
    }
    return kExitOk;
}

int run_validate(const ValidateArgs& args) {
    const Instance instance = load_instance_file(args.instance);
    const TourFile tour_file = load_tour_file(args.tour);
    const auto report = validate_tour(instance, tour_file.order);
    if (report.feasible) {
        std::cout << "feasible max_payload=" << format_double(report.max_payload) << " cost="
                  << format_double(tour_cost(instance, tour_file.order)) << "\n";
        return kExitOk;
    }
    std::cout << "infeasible " << report.message << "\n";
    return kExitInfeasible;
}

int run_bench_cmd(const BenchArgs& args) {
    std::vector<Direction> directions;
    if (args.directions == "both") {
        directions = {Direction::ChildrenCentral, Direction::ParentsCentral};
    } else {
        const auto direction = direction_from_name(args.directions);
        if (!direction) {
            std::cerr << "unknown direction '" << args.directions << "'\n";
            return kExitUsage;
        }
        directions = {*direction};
    }

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(args.tsplib_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".tsp") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cerr << "no .tsp files in " << args.tsplib_dir << "\n";
        return kExitIo;
    }

    const Metric metric = metric_flag(args.metric);
    std::vector<Instance> instances;
    for (const auto& file : files) {
        const auto cloud = load_tsplib_file(file);
        for (Direction direction : directions) {
            instances.push_back(generate(cloud, {direction, TieBreak::StableFileOrder, metric}));
        }
    }

    const int workers = args.workers > 0 ? args.workers : default_workers();
    const auto records = run_bench(instances, workers);
    std::ofstream out(args.out);
    if (!out) throw ParseError("cannot open " + args.out + " for writing");
    write_bench_csv(records, out, args.paper_format);
    std::cout << "wrote " << args.out << " (" << records.size() << " rows)\n";

    if (!args.timing_out.empty()) {
        const auto timings = timing_study(args.timing_sizes, 20240229);
        std::ofstream timing(args.timing_out);
        if (!timing) throw ParseError("cannot open " + args.timing_out + " for writing");
        write_timing_csv(timings, timing);
        const CubicFit fit = fit_cubic(timings, "achci");
        std::cout << "wrote " << args.timing_out << " (cubic fit r2="
                  << format_double(fit.r_squared) << ")\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"TSP-PC toolkit: instance generation, construction heuristics, exact oracle, "
                 "model export, benchmarking"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a TSP-PC instance from a TSPLIB file");
    gen_cmd->add_option("--tsplib", gen_args.tsplib, "TSPLIB .tsp input")->required();
    gen_cmd->add_option("--direction", gen_args.direction,
                        "children|parents (which group sits near the centroid)")
        ->required();
    gen_cmd->add_option("--metric", gen_args.metric, "euc2d-rounded|euc2d-continuous");
    gen_cmd->add_option("-o,--out", gen_args.out, "output .tsppc path")->required();

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Run construction heuristics on an instance");
    solve_cmd->add_option("--instance", solve_args.instance, "input .tsppc path")->required();
    solve_cmd->add_option("--method", solve_args.method, "achci|nn|both");
    solve_cmd->add_option("--tour-out", solve_args.tour_out,
                          "tour output path (method name inserted when --method both)");

    ExactArgs exact_args;
    auto* exact_cmd = app.add_subcommand("exact", "Optimal tour by dynamic programming");
    exact_cmd->add_option("--instance", exact_args.instance, "input .tsppc path")->required();
    exact_cmd->add_option("--limit", exact_args.limit, "site-count cap");
    exact_cmd->add_option("--tour-out", exact_args.tour_out, "tour output path");

    MilpArgs milp_args;
    auto* milp_cmd = app.add_subcommand("export-milp", "Write the arc model in LP format");
    milp_cmd->add_option("--instance", milp_args.instance, "input .tsppc path")->required();
    milp_cmd->add_option("--warm-start", milp_args.warm_start,
                         "tour file; writes start values next to the model");
    milp_cmd->add_option("-o,--out", milp_args.out, "output .lp path")->required();
    milp_cmd->add_flag("--mtz", milp_args.mtz, "ordering-variable subtour elimination");
    milp_cmd->add_flag("--sparse-lambda", milp_args.sparse_lambda,
                       "omit product variables fixed at zero");
    milp_cmd->add_option("--dfj-cap", milp_args.dfj_cap, "subset enumeration site cap");

    ValidateArgs validate_args;
    auto* validate_cmd = app.add_subcommand("validate", "Check a tour against an instance");
    validate_cmd->add_option("--instance", validate_args.instance, "input .tsppc path")->required();
    validate_cmd->add_option("--tour", validate_args.tour, "tour file to check")->required();

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Benchmark heuristics over a TSPLIB directory");
    bench_cmd->add_option("--tsplib-dir", bench_args.tsplib_dir, "directory of .tsp files")
        ->required();
    bench_cmd->add_option("--directions", bench_args.directions, "both|children|parents");
    bench_cmd->add_option("--metric", bench_args.metric, "euc2d-rounded|euc2d-continuous");
    bench_cmd->add_option("-o,--out", bench_args.out, "benchmark CSV path")->required();
    bench_cmd->add_option("--timing-out", bench_args.timing_out,
                          "also run the scaling study and write its CSV here");
    bench_cmd->add_option("--timing-sizes", bench_args.timing_sizes,
                          "point-cloud sizes for the scaling study");
    bench_cmd->add_option("--workers", bench_args.workers,
                          "parallel workers (default: TSPPC_WORKERS or hardware threads)");
    bench_cmd->add_flag("--paper-format", bench_args.paper_format,
                        "3-significant-figure scientific costs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen_args);
        if (solve_cmd->parsed()) return run_solve(solve_args);
        if (exact_cmd->parsed()) return run_exact(exact_args);
        if (milp_cmd->parsed()) return run_export_milp(milp_args);
        if (validate_cmd->parsed()) return run_validate(validate_args);
        if (bench_cmd->parsed()) return run_bench_cmd(bench_args);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
