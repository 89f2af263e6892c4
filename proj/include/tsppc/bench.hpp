#pragma once

#include "tsppc/instance.hpp"
#include "tsppc/tsplib.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tsppc {

struct BenchRecord {
    std::string instance;
    std::string direction;
    int nodes = 0; // original point count: sites plus depot
    double nn_cost = 0.0;
    double achci_cost = 0.0;
    double delta_percent = 0.0; // 100 * (achci - nn) / nn
    double nn_seconds = 0.0;
    double achci_seconds = 0.0;
    std::string metric;
};

// Number of parallel workers: the TSPPC_WORKERS environment variable when
// set to a positive integer, otherwise the hardware thread count.
int default_workers();

// Runs both heuristics on every instance. Record order matches input order
// regardless of worker scheduling, so cost columns are reproducible.
std::vector<BenchRecord> run_bench(const std::vector<Instance>& instances, int workers);

// CSV with a header row and a trailing "# complete rows=N" marker so a
// truncated file is detectable. paper_format switches costs to 3-significant-
// figure scientific notation.
void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out,
                     bool paper_format = false);

struct TimingRecord {
    int nodes = 0;
    std::string heuristic;
    double seconds = 0.0;
};

// Uniform random point cloud on [0, 1000)^2, reproducible from the seed.
TsplibPointCloud uniform_cloud(int n, uint64_t seed);

// Times both heuristics on generated children-central instances of the given
// cloud sizes: single-threaded, wall clock around the construction call
// only, median of 3 runs. The insertion scan is the full-rescan variant, the
// one with the cubic worst case being measured.
std::vector<TimingRecord> timing_study(const std::vector<int>& sizes, uint64_t seed);

void write_timing_csv(const std::vector<TimingRecord>& records, std::ostream& out);

struct CubicFit {
    double coefficient = 0.0; // seconds per nodes^3
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Least-squares fit of seconds against nodes^3 over the records with the
// given heuristic name.
CubicFit fit_cubic(const std::vector<TimingRecord>& records, const std::string& heuristic);

} // namespace tsppc
