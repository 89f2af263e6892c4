#include "tsppc/bench.hpp"

#include "tsppc/achci.hpp"
#include "tsppc/format.hpp"
#include "tsppc/generator.hpp"
#include "tsppc/nearest_neighbor.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <random>
#include <thread>

namespace tsppc {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

BenchRecord bench_one(const Instance& instance) {
    BenchRecord record;
    record.instance = instance.name();
    record.direction = instance.direction();
    record.nodes = instance.num_sites() + 1;
    record.metric = metric_name(instance.metric());

    auto start = std::chrono::steady_clock::now();
    const Tour nn = nearest_neighbor(instance);
    record.nn_seconds = seconds_since(start);
    record.nn_cost = nn.cost;

    start = std::chrono::steady_clock::now();
    const AchciResult result = achci(instance);
    record.achci_seconds = seconds_since(start);
    record.achci_cost = result.tour.cost;

    record.delta_percent =
        record.nn_cost == 0.0 ? 0.0 : 100.0 * (record.achci_cost - record.nn_cost) / record.nn_cost;
    return record;
}

double median_of_three(double a, double b, double c) {
    return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

} // namespace

int default_workers() {
    if (const char* env = std::getenv("TSPPC_WORKERS")) {
        const auto value = parse_int(env);
        if (value && *value > 0) return static_cast<int>(*value);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<BenchRecord> run_bench(const std::vector<Instance>& instances, int workers) {
    std::vector<BenchRecord> records(instances.size());
    if (instances.empty()) return records;
    workers = std::clamp<int>(workers, 1, static_cast<int>(instances.size()));

    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            const size_t index = next.fetch_add(1);
            if (index >= instances.size()) return;
            records[index] = bench_one(instances[index]);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
    }
    return records;
}

void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out,
                     bool paper_format) {
    out << "instance,direction,nodes,nn_cost,achci_cost,delta_percent,nn_seconds,achci_seconds,"
           "metric\n";
    for (const auto& r : records) {
        const std::string nn =
            paper_format ? format_scientific(r.nn_cost, 3) : format_double(r.nn_cost);
        const std::string achci =
            paper_format ? format_scientific(r.achci_cost, 3) : format_double(r.achci_cost);
        char delta[32];
        std::snprintf(delta, sizeof delta, "%.1f", r.delta_percent);
        out << r.instance << "," << r.direction << "," << r.nodes << "," << nn << "," << achci
            << "," << (paper_format ? std::string(delta) : format_double(r.delta_percent)) << ","
            << format_double(r.nn_seconds) << "," << format_double(r.achci_seconds) << ","
            << r.metric << "\n";
    }
    out << "# complete rows=" << records.size() << "\n";
}

TsplibPointCloud uniform_cloud(int n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, 1000.0);
    TsplibPointCloud cloud;
    cloud.name = "uniform" + std::to_string(n);
    for (int i = 0; i < n; ++i) {
        const double x = coord(rng);
        const double y = coord(rng);
        cloud.points.emplace_back(x, y);
        cloud.ids.push_back(i + 1);
    }
    return cloud;
}

std::vector<TimingRecord> timing_study(const std::vector<int>& sizes, uint64_t seed) {
    std::vector<TimingRecord> records;
    AchciOptions rescan;
    rescan.incremental = false;
    for (int n : sizes) {
        const auto cloud = uniform_cloud(n, seed + static_cast<uint64_t>(n));
        const Instance instance = generate(cloud, {Direction::ChildrenCentral});

        double nn_times[3];
        double achci_times[3];
        for (int repeat = 0; repeat < 3; ++repeat) {
            auto start = std::chrono::steady_clock::now();
            (void)nearest_neighbor(instance);
            nn_times[repeat] = seconds_since(start);

            start = std::chrono::steady_clock::now();
            (void)achci(instance, rescan);
            achci_times[repeat] = seconds_since(start);
        }
        records.push_back({n, "nn", median_of_three(nn_times[0], nn_times[1], nn_times[2])});
        records.push_back(
            {n, "achci", median_of_three(achci_times[0], achci_times[1], achci_times[2])});
    }
    return records;
}

void write_timing_csv(const std::vector<TimingRecord>& records, std::ostream& out) {
    out << "nodes,heuristic,seconds\n";
    for (const auto& r : records) {
        out << r.nodes << "," << r.heuristic << "," << format_double(r.seconds) << "\n";
    }
    out << "# complete rows=" << records.size() << "\n";
}

CubicFit fit_cubic(const std::vector<TimingRecord>& records, const std::string& heuristic) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& r : records) {
        if (r.heuristic != heuristic) continue;
        xs.push_back(static_cast<double>(r.nodes) * r.nodes * r.nodes);
        ys.push_back(r.seconds);
    }
    CubicFit fit;
    if (xs.size() < 2) return fit;

    const auto n = static_cast<Eigen::Index>(xs.size());
    Eigen::MatrixXd a(n, 2);
    Eigen::VectorXd b(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        a(i, 0) = xs[static_cast<size_t>(i)];
        a(i, 1) = 1.0;
        b(i) = ys[static_cast<size_t>(i)];
    }
    const Eigen::Vector2d solution = a.colPivHouseholderQr().solve(b);
    fit.coefficient = solution(0);
    fit.intercept = solution(1);

    const double mean = b.mean();
    const double total = (b.array() - mean).square().sum();
    const double residual = (b - a * solution).squaredNorm();
    fit.r_squared = total == 0.0 ? 1.0 : 1.0 - residual / total;
    return fit;
}

} // namespace tsppc
