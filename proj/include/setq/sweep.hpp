#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "setq/oracle.hpp"
#include "setq/quantum.hpp"

namespace setq {

enum class AlgorithmKind { QuantumGeneral, QuantumOneToOne, ClassicalScan, ClassicalBirthday };

const char* to_string(AlgorithmKind k);
AlgorithmKind algorithm_from_string(const std::string& name);

struct SweepConfig {
    std::vector<int> sizes;  // ascending, non-empty
    AlgorithmKind algorithm = AlgorithmKind::QuantumGeneral;
    int trials_per_size = 1;
    std::uint64_t master_seed = 0;
    double budget_constant = 10.0;
    double birthday_constant = 2.0;
    SetPromise promise = SetPromise::Equal;  // promise of the generated instances
    std::string output_path;                 // empty: don't write a file
};

struct SweepRow {
    int n = 0;
    std::string algorithm;
    int trials = 0;
    double success_rate = 0.0;
    double median_queries = 0.0;
    double mean_queries = 0.0;
    double p10_queries = 0.0;
    double p90_queries = 0.0;
    std::string error;  // empty on success; rows with errors carry no stats
};

inline constexpr const char* kSweepCsvHeader =
    "n,algorithm,trials,success_rate,median_queries,mean_queries,p10_queries,p90_queries,error";

// One row per size: seeded one-to-one instances of the configured promise
// (m = 2n), per-trial seeds derived from (master_seed, n, trial). Identical
// configs reproduce identical rows and byte-identical CSV files. Per-size
// domain errors land in the row's error column instead of aborting.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

std::string to_csv(const std::vector<SweepRow>& rows);
void write_csv_file(const std::vector<SweepRow>& rows, const std::string& path);
std::vector<SweepRow> read_csv_file(const std::string& path);

struct PowerLawFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Least-squares fit of log(median_queries) against log(n). Requires at
// least 3 rows with distinct n; rows carrying errors are rejected.
PowerLawFit fit_exponent(const std::vector<SweepRow>& rows);

// Linear-interpolation quantile of a sorted sample, q in [0, 1].
double quantile_sorted(const std::vector<double>& sorted, double q);

}  // namespace setq
