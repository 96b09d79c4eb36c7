#include "rufpp/bench.hpp"

#include "rufpp/oracle.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

namespace rufpp {

namespace {

BenchRow run_one(const std::string& id, const Instance& instance, const std::string& label, const SolverConfig& config,
                 std::int64_t lb, std::optional<int> chi) {
    const auto start = std::chrono::steady_clock::now();
    const auto result = solve(instance.path, instance.flows, config);
    const auto stop = std::chrono::steady_clock::now();

    BenchRow row;
    row.instance = id;
    row.n = static_cast<int>(instance.flows.size());
    row.m = instance.path.num_edges();
    row.cap_ratio = to_double(instance.path.capacity_ratio());
    row.strategy = label;
    row.rounds = result.schedule.num_rounds();
    row.lower_bound = lb;
    row.oracle_chi = chi;
    const double denom = chi ? static_cast<double>(std::max(*chi, 1)) : static_cast<double>(std::max<std::int64_t>(lb, 1));
    row.ratio = static_cast<double>(row.rounds) / denom;
    row.feasible = verify_schedule(instance.path, instance.flows, result.schedule).feasible;
    row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return row;
}

std::string format_double(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

} // namespace

std::vector<BenchRow> bench_instance(const std::string& id, const Instance& instance, const BenchOptions& options) {
    const std::int64_t lb = lower_bound(instance.path, instance.flows);
    std::optional<int> chi;
    if (options.oracle_limit > 0 && instance.flows.size() <= options.oracle_limit) {
        chi = exact_chi(instance.path, instance.flows, options.oracle_limit).chi;
    }

    std::vector<BenchRow> rows;
    if (options.online) {
        SolverConfig config;
        config.mode = Mode::Online;
        rows.push_back(run_one(id, instance, "online", config, lb, chi));
    }
    if (options.offline) {
        rows.push_back(run_one(id, instance, "offline", SolverConfig{}, lb, chi));
        if (options.per_strategy) {
            for (auto s : {LineStrategy::L1, LineStrategy::L2, LineStrategy::L3}) {
                SolverConfig config;
                config.strategies = {s};
                rows.push_back(run_one(id, instance, "offline-" + std::string(to_string(s)), config, lb, chi));
            }
        }
    }
    return rows;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) {
        return value;
    }
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
    out << "instance,n,m,cap_ratio,strategy,rounds,lower_bound,oracle_chi,ratio,ratio_basis,feasible,wall_ms\r\n";
    for (const auto& r : rows) {
        out << csv_field(r.instance) << ',' << r.n << ',' << r.m << ',' << format_double(r.cap_ratio) << ','
            << csv_field(r.strategy) << ',' << r.rounds << ',' << r.lower_bound << ','
            << (r.oracle_chi ? std::to_string(*r.oracle_chi) : std::string()) << ',' << format_double(r.ratio) << ','
            << r.ratio_basis() << ',' << (r.feasible ? "true" : "false") << ',' << format_double(r.wall_ms) << "\r\n";
    }
}

LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw ParameterError("fit_linear needs two or more paired points");
    }
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0) {
        throw ParameterError("fit_linear needs two distinct x values");
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy == 0) {
        fit.r2 = 1.0;
        return fit;
    }
    double ss_res = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = y[i] - (fit.slope * x[i] + fit.intercept);
        ss_res += e * e;
    }
    fit.r2 = 1.0 - ss_res / syy;
    return fit;
}

ScalingReport fit_scaling(std::span<const BenchRow> rows, const std::string& strategy) {
    std::map<double, std::pair<double, int>> groups;
    for (const auto& r : rows) {
        if (r.strategy == strategy && r.cap_ratio > 2.0 - 1e-12) {
            auto& g = groups[r.cap_ratio];
            g.first += r.ratio;
            ++g.second;
        }
    }
    ScalingReport report;
    std::vector<double> loglog, log;
    for (const auto& [cap, g] : groups) {
        report.cap_ratios.push_back(cap);
        report.mean_ratios.push_back(g.first / g.second);
        log.push_back(std::log2(cap));
        loglog.push_back(std::log2(std::log2(cap)));
    }
    report.loglog = fit_linear(loglog, report.mean_ratios);
    report.log = fit_linear(log, report.mean_ratios);
    return report;
}

} // namespace rufpp
