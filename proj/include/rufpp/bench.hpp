#pragma once

#include "rufpp/engine.hpp"
#include "rufpp/io.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rufpp {

/// One solver run on one instance.
struct BenchRow {
    std::string instance;
    int n = 0;
    int m = 0;
    double cap_ratio = 1.0;
    std::string strategy;
    int rounds = 0;
    std::int64_t lower_bound = 0;
    std::optional<int> oracle_chi;
    /// rounds / oracle_chi when known, else rounds / max(lower_bound, 1)
    double ratio = 0.0;
    bool feasible = false;
    double wall_ms = 0.0;

    std::string ratio_basis() const { return oracle_chi ? "oracle" : "congestion"; }
};

struct BenchOptions {
    bool online = true;
    bool offline = true;
    /// Extra offline rows restricted to each single line strategy.
    bool per_strategy = true;
    /// Oracle runs on instances with at most this many flows (0 disables it).
    std::size_t oracle_limit = 8;
};

std::vector<BenchRow> bench_instance(const std::string& id, const Instance& instance, const BenchOptions& options);

/// Header plus one RFC 4180 record per row.
void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows);

std::string csv_field(const std::string& value);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

/// Least squares y = slope * x + intercept. R^2 is 1 when y is constant.
LinearFit fit_linear(std::span<const double> x, std::span<const double> y);

/*
 * Growth of the mean ratio against the capacity spread: one point per
 * distinct c_max/c_min, fitted against log2 log2 and against log2 of it.
 */
struct ScalingReport {
    std::vector<double> cap_ratios;
    std::vector<double> mean_ratios;
    LinearFit loglog;
    LinearFit log;
};

ScalingReport fit_scaling(std::span<const BenchRow> rows, const std::string& strategy);

} // namespace rufpp
