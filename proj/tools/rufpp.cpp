#include "rufpp/bench.hpp"
#include "rufpp/engine.hpp"
#include "rufpp/generator.hpp"
#include "rufpp/io.hpp"
#include "rufpp/oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace rufpp;

enum Exit { kOk = 0, kInfeasible = 1, kUsage = 2, kInternal = 3 };

struct Common {
    std::string mode = "offline";
    std::string strategies;
    std::string alpha;
    std::uint64_t seed = 1;
    std::size_t oracle_limit = 8;
    std::string out;
    std::string csv;
};

std::vector<LineStrategy> parse_strategies(const std::string& list) {
    std::vector<LineStrategy> result;
    std::stringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            result.push_back(parse_line_strategy(item));
        }
    }
    return result;
}

SolverConfig make_config(const Common& c) {
    SolverConfig config;
    config.mode = c.mode == "online" ? Mode::Online : Mode::Offline;
    config.strategies = parse_strategies(c.strategies);
    if (!c.alpha.empty()) {
        config.alpha = parse_rational(c.alpha);
    }
    return config;
}

// Writes to the file at `path`, or to stdout when it is empty.
template <typename Fn>
void emit(const std::string& path, Fn&& write) {
    if (path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParameterError("cannot open '" + path + "' for writing");
    }
    write(out);
}

std::string summary(const Instance& inst, int rounds) {
    const auto lb = lower_bound(inst.path, inst.flows);
    std::ostringstream out;
    out << "FEASIBLE rounds " << rounds << " lower_bound " << lb << " ratio "
        << static_cast<double>(rounds) / static_cast<double>(std::max<std::int64_t>(lb, 1));
    return out.str();
}

int cmd_solve(const std::string& file, const Common& c) {
    const auto inst = read_instance_file(file);
    const auto result = solve(inst.path, inst.flows, make_config(c));
    const auto report = verify_schedule(inst.path, inst.flows, result.schedule);
    if (!report.feasible) {
        std::cerr << "internal: solver produced an infeasible schedule\n";
        return kInternal;
    }
    emit(c.out, [&](std::ostream& out) { write_schedule(out, result.schedule); });
    std::cerr << summary(inst, result.schedule.num_rounds()) << " small " << result.small_rounds << " mid "
              << result.mid_rounds << " large " << result.large_rounds;
    if (result.large_strategy) {
        std::cerr << " lines " << to_string(*result.large_strategy);
    }
    std::cerr << '\n';
    return kOk;
}

int cmd_simulate_online(const std::string& file, const Common& c) {
    const auto inst = read_instance_file(file);
    const auto strategies = parse_strategies(c.strategies);
    OnlineSolver solver(inst.path, choose_online_strategy(inst.path, strategies));
    std::cout << "# lines " << to_string(solver.strategy()) << '\n';
    std::cout << "# arrival flow s t sigma pipeline round rounds_so_far\n";
    for (const auto& f : inst.flows) {
        const auto a = solver.insert(f);
        std::cout << f.id + 1 << ' ' << f.s << ' ' << f.t << ' ' << format_rational(f.sigma) << ' '
                  << to_string(a.pipeline) << ' ' << a.round << ' ' << solver.schedule().num_rounds() << '\n';
    }
    if (!c.out.empty()) {
        emit(c.out, [&](std::ostream& out) { write_schedule(out, solver.schedule()); });
    }
    std::cerr << summary(inst, solver.schedule().num_rounds()) << '\n';
    return kOk;
}

int cmd_verify(const std::string& instance_file, const std::string& schedule_file) {
    const auto inst = read_instance_file(instance_file);
    const auto schedule = read_schedule_file(schedule_file);
    const auto report = verify_schedule(inst.path, inst.flows, schedule);
    if (report.feasible) {
        std::cout << "FEASIBLE rounds " << schedule.num_rounds() << '\n';
        return kOk;
    }
    std::cout << "INFEASIBLE violations " << report.violations.size() << '\n';
    for (const auto& v : report.violations) {
        std::cout << "round " << v.round << " edge " << v.edge << " load " << format_rational(v.load) << " capacity "
                  << format_rational(v.capacity) << '\n';
    }
    return kInfeasible;
}

int cmd_oracle(const std::string& file, const Common& c) {
    const auto inst = read_instance_file(file);
    const auto result = exact_chi(inst.path, inst.flows, c.oracle_limit);
    std::cerr << "chi " << result.chi << " nodes " << result.nodes << '\n';
    emit(c.out, [&](std::ostream& out) { write_schedule(out, result.witness); });
    return kOk;
}

std::vector<std::string> collect_files(const std::vector<std::string>& paths) {
    std::vector<std::string> files;
    for (const auto& p : paths) {
        if (std::filesystem::is_directory(p)) {
            std::vector<std::string> inner;
            for (const auto& entry : std::filesystem::directory_iterator(p)) {
                if (entry.is_regular_file()) {
                    inner.push_back(entry.path().string());
                }
            }
            std::sort(inner.begin(), inner.end());
            files.insert(files.end(), inner.begin(), inner.end());
        } else {
            files.push_back(p);
        }
    }
    return files;
}

struct SweepFlags {
    int count = 20;
    bool cap_sweep = false;
    int seeds_per_point = 8;
};

int cmd_bench(const std::vector<std::string>& paths, const GenSpec& base, const SweepFlags& sweep, const Common& c) {
    BenchOptions options;
    options.oracle_limit = c.oracle_limit;
    std::vector<BenchRow> rows;

    if (!paths.empty()) {
        for (const auto& file : collect_files(paths)) {
            const auto part = bench_instance(std::filesystem::path(file).filename().string(), read_instance_file(file),
                                             options);
            rows.insert(rows.end(), part.begin(), part.end());
        }
    } else if (sweep.cap_sweep) {
        // all-large flows on geometric capacities 1..2^j
        options.per_strategy = false;
        for (int j = 1; j <= 16; ++j) {
            for (int k = 0; k < sweep.seeds_per_point; ++k) {
                GenSpec spec = base;
                spec.profile = CapacityProfile::Geometric;
                spec.low = 1;
                spec.high = pow(Rational(2), j);
                spec.frac_small = spec.frac_mid = 0;
                spec.frac_large = 1;
                spec.seed = c.seed + static_cast<std::uint64_t>(1000 * j + k);
                const auto part =
                    bench_instance("cap" + std::to_string(j) + "-" + std::to_string(k), generate(spec), options);
                rows.insert(rows.end(), part.begin(), part.end());
            }
        }
        const auto report = fit_scaling(rows, "online");
        std::cerr << "online loglog fit: slope " << report.loglog.slope << " r2 " << report.loglog.r2 << '\n';
        std::cerr << "online log fit:    slope " << report.log.slope << " r2 " << report.log.r2 << '\n';
    } else {
        for (int i = 0; i < sweep.count; ++i) {
            GenSpec spec = base;
            spec.seed = c.seed + static_cast<std::uint64_t>(i);
            const auto part = bench_instance("gen-" + std::to_string(spec.seed), generate(spec), options);
            rows.insert(rows.end(), part.begin(), part.end());
        }
    }

    emit(c.csv.empty() ? c.out : c.csv, [&](std::ostream& out) { write_bench_csv(out, rows); });
    const bool all_feasible = std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.feasible; });
    return all_feasible ? kOk : kInternal;
}

void add_gen_flags(CLI::App* cmd, GenSpec& spec, std::string& profile, std::string& low, std::string& high,
                   std::string& alpha) {
    cmd->add_option("--m", spec.m, "number of edges")->capture_default_str();
    cmd->add_option("--n", spec.n, "number of flows")->capture_default_str();
    cmd->add_option("--profile", profile, "uniform, random-walk, bimodal or geometric")->capture_default_str();
    cmd->add_option("--low", low, "smallest capacity")->capture_default_str();
    cmd->add_option("--high", high, "largest capacity")->capture_default_str();
    cmd->add_option("--small", spec.frac_small, "fraction of flows below b/4")->capture_default_str();
    cmd->add_option("--mid", spec.frac_mid, "fraction in [b/4, alpha*b]")->capture_default_str();
    cmd->add_option("--large", spec.frac_large, "fraction above alpha*b")->capture_default_str();
    cmd->add_option("--gen-alpha", alpha, "mid/large split for generated sizes")->capture_default_str();
    cmd->add_option("--max-span", spec.max_span, "longest flow in edges (0 = whole path)")->capture_default_str();
}

void finish_gen_spec(GenSpec& spec, const std::string& profile, const std::string& low, const std::string& high,
                     const std::string& alpha, std::uint64_t seed) {
    spec.profile = parse_capacity_profile(profile);
    spec.low = parse_rational(low);
    spec.high = parse_rational(high);
    spec.alpha = parse_rational(alpha);
    spec.seed = seed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Round scheduling of unsplittable flows on a capacitated path"};
    app.require_subcommand(1);

    Common c;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--mode", c.mode, "offline or online")
            ->check(CLI::IsMember({"offline", "online"}))
            ->capture_default_str();
        cmd->add_option("--strategies", c.strategies, "comma list of l1,l2,l3");
        cmd->add_option("--alpha", c.alpha, "mid threshold for offline mode");
        cmd->add_option("--seed", c.seed, "random seed")->envname("RUFPP_SEED")->capture_default_str();
        cmd->add_option("--oracle-limit", c.oracle_limit, "largest flow count for the exact oracle")
            ->capture_default_str();
        cmd->add_option("--out", c.out, "output file (default stdout)");
        cmd->add_option("--csv", c.csv, "CSV output file");
    };

    std::string instance_file, schedule_file;

    auto* solve_cmd = app.add_subcommand("solve", "schedule an instance file");
    solve_cmd->add_option("instance", instance_file)->required();
    add_common(solve_cmd);

    auto* online_cmd = app.add_subcommand("simulate-online", "feed flows online in file order, logging each arrival");
    online_cmd->add_option("instance", instance_file)->required();
    add_common(online_cmd);

    GenSpec spec;
    std::string profile = "random-walk", low = "1", high = "16", gen_alpha = "1/2";
    auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
    add_gen_flags(gen_cmd, spec, profile, low, high, gen_alpha);
    add_common(gen_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "check a schedule against an instance");
    verify_cmd->add_option("instance", instance_file)->required();
    verify_cmd->add_option("schedule", schedule_file)->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "exact minimum round count for a small instance");
    oracle_cmd->add_option("instance", instance_file)->required();
    add_common(oracle_cmd);

    std::vector<std::string> bench_paths;
    SweepFlags sweep;
    auto* bench_cmd = app.add_subcommand("bench", "benchmark instance files or a generated sweep");
    bench_cmd->add_option("paths", bench_paths, "instance files or directories");
    bench_cmd->add_option("--count", sweep.count, "generated instances")->capture_default_str();
    bench_cmd->add_flag("--cap-sweep", sweep.cap_sweep, "all-large sweep over c_max/c_min = 2^1..2^16");
    bench_cmd->add_option("--per-point", sweep.seeds_per_point, "instances per sweep point")->capture_default_str();
    add_gen_flags(bench_cmd, spec, profile, low, high, gen_alpha);
    add_common(bench_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*solve_cmd) {
            return cmd_solve(instance_file, c);
        }
        if (*online_cmd) {
            return cmd_simulate_online(instance_file, c);
        }
        if (*gen_cmd) {
            finish_gen_spec(spec, profile, low, high, gen_alpha, c.seed);
            const auto inst = generate(spec);
            emit(c.out, [&](std::ostream& out) { write_instance(out, inst); });
            return kOk;
        }
        if (*verify_cmd) {
            return cmd_verify(instance_file, schedule_file);
        }
        if (*oracle_cmd) {
            return cmd_oracle(instance_file, c);
        }
        if (*bench_cmd) {
            finish_gen_spec(spec, profile, low, high, gen_alpha, c.seed);
            return cmd_bench(bench_paths, spec, sweep, c);
        }
    } catch (const InfeasibleFlowError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const ScheduleStructureError& e) {
        std::cerr << "invalid schedule: " << e.what() << '\n';
        return kInfeasible;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}
