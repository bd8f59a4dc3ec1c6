#include "setq/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "setq/classical.hpp"
#include "setq/rng.hpp"

namespace setq {

const char* to_string(AlgorithmKind k) {
    switch (k) {
        case AlgorithmKind::QuantumGeneral: return "quantum_general";
        case AlgorithmKind::QuantumOneToOne: return "quantum_one_to_one";
        case AlgorithmKind::ClassicalScan: return "classical_scan";
        case AlgorithmKind::ClassicalBirthday: return "classical_birthday";
    }
    return "quantum_general";
}

AlgorithmKind algorithm_from_string(const std::string& name) {
    if (name == "quantum_general" || name == "general") return AlgorithmKind::QuantumGeneral;
    if (name == "quantum_one_to_one" || name == "one_to_one") return AlgorithmKind::QuantumOneToOne;
    if (name == "classical_scan" || name == "scan") return AlgorithmKind::ClassicalScan;
    if (name == "classical_birthday" || name == "birthday") return AlgorithmKind::ClassicalBirthday;
    fail(Errc::InvalidParams, "unknown algorithm '" + name + "'");
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return 0.0;
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = static_cast<std::size_t>(std::ceil(pos));
    const double frac = pos - std::floor(pos);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

namespace {

RunResult run_trial(AlgorithmKind algorithm, const SweepConfig& config,
                    const SetEqualityInstance& inst, std::uint64_t run_seed) {
    switch (algorithm) {
        case AlgorithmKind::QuantumGeneral:
            return qalg_general_set_equality(inst, run_seed, config.budget_constant);
        case AlgorithmKind::QuantumOneToOne:
            return qalg_one_to_one_set_equality(inst, run_seed, config.budget_constant);
        case AlgorithmKind::ClassicalScan: return classical_scan_set_equality(inst);
        case AlgorithmKind::ClassicalBirthday:
            return classical_birthday_one_to_one(inst, config.birthday_constant, run_seed);
    }
    fail(Errc::InvalidParams, "unhandled algorithm");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
    require(!config.sizes.empty(), Errc::InvalidParams, "sweep needs at least one size");
    require(std::is_sorted(config.sizes.begin(), config.sizes.end()), Errc::InvalidParams,
            "sweep sizes must be ascending");
    require(config.trials_per_size >= 1, Errc::InvalidParams, "trials_per_size must be >= 1");

    std::vector<SweepRow> rows;
    for (int n : config.sizes) {
        SweepRow row;
        row.n = n;
        row.algorithm = to_string(config.algorithm);
        try {
            std::vector<double> queries;
            queries.reserve(static_cast<std::size_t>(config.trials_per_size));
            std::int64_t successes = 0;
            double query_sum = 0.0;

            for (int trial = 0; trial < config.trials_per_size; ++trial) {
                const std::uint64_t inst_seed = derive_seed(
                    config.master_seed,
                    {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial), 1});
                const std::uint64_t run_seed = derive_seed(
                    config.master_seed,
                    {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial), 2});
                const SetEqualityInstance inst = gen_set_equality(
                    n, 2 * n, config.promise, SetEqualityVariant::one_to_one(), inst_seed);
                const RunResult result = run_trial(config.algorithm, config, inst, run_seed);
                successes += result.success;
                query_sum += static_cast<double>(result.queries_used);
                queries.push_back(static_cast<double>(result.queries_used));
            }

            std::sort(queries.begin(), queries.end());
            row.trials = config.trials_per_size;
            row.success_rate = static_cast<double>(successes) / config.trials_per_size;
            row.median_queries = quantile_sorted(queries, 0.5);
            row.mean_queries = query_sum / config.trials_per_size;
            row.p10_queries = quantile_sorted(queries, 0.1);
            row.p90_queries = quantile_sorted(queries, 0.9);
        } catch (const DomainError& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }

    if (!config.output_path.empty()) write_csv_file(rows, config.output_path);
    return rows;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::string out = kSweepCsvHeader;
    out.push_back('\n');
    for (const SweepRow& row : rows) {
        std::string error = row.error;
        std::replace(error.begin(), error.end(), ',', ';');  // keep the row parseable
        out += std::to_string(row.n) + ',' + row.algorithm + ',' + std::to_string(row.trials) +
               ',' + format_double(row.success_rate) + ',' + format_double(row.median_queries) +
               ',' + format_double(row.mean_queries) + ',' + format_double(row.p10_queries) + ',' +
               format_double(row.p90_queries) + ',' + error + '\n';
    }
    return out;
}

void write_csv_file(const std::vector<SweepRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), Errc::InvalidParams, "cannot open '" + path + "' for writing");
    out << to_csv(rows);
}

std::vector<SweepRow> read_csv_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::InvalidParams, "cannot open '" + path + "'");
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), Errc::InvalidParams, "empty CSV file");

    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() == 8) fields.emplace_back();  // no trailing error field
        require(fields.size() == 9, Errc::InvalidParams, "malformed CSV row: " + line);

        SweepRow row;
        row.n = std::stoi(fields[0]);
        row.algorithm = fields[1];
        row.trials = std::stoi(fields[2]);
        row.success_rate = std::stod(fields[3]);
        row.median_queries = std::stod(fields[4]);
        row.mean_queries = std::stod(fields[5]);
        row.p10_queries = std::stod(fields[6]);
        row.p90_queries = std::stod(fields[7]);
        row.error = fields[8];
        rows.push_back(std::move(row));
    }
    return rows;
}

PowerLawFit fit_exponent(const std::vector<SweepRow>& rows) {
    std::vector<double> xs, ys;
    for (const SweepRow& row : rows) {
        require(row.error.empty(), Errc::InvalidParams,
                "cannot fit rows carrying errors (n = " + std::to_string(row.n) + ")");
        require(row.median_queries > 0, Errc::InvalidParams,
                "median query count must be positive for a log-log fit");
        xs.push_back(std::log(static_cast<double>(row.n)));
        ys.push_back(std::log(row.median_queries));
    }

    std::vector<double> distinct = xs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    require(distinct.size() >= 3, Errc::TooFewPoints,
            "power-law fit needs >= 3 rows with distinct n");

    const auto count = static_cast<double>(xs.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mean_x = sx / count, mean_y = sy / count;

    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
        sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
        syy += (ys[i] - mean_y) * (ys[i] - mean_y);
    }

    PowerLawFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    double ss_res = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss_res += e * e;
    }
    fit.r_squared = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
    return fit;
}

}  // namespace setq
