#include "rufpp/engine.hpp"

#include <algorithm>

namespace rufpp {

std::string_view to_string(Pipeline pipeline) {
    switch (pipeline) {
    case Pipeline::Small:
        return "small";
    case Pipeline::Mid:
        return "mid";
    case Pipeline::Large:
        return "large";
    }
    return "?";
}

namespace {

bool contains(std::span<const LineStrategy> set, LineStrategy s) {
    return std::find(set.begin(), set.end(), s) != set.end();
}

AnnotatedFlow annotate_feasible(const PathInstance& path, const Flow& flow) {
    auto af = annotate(path, flow);
    if (af.flow.sigma > af.bottleneck) {
        throw InfeasibleFlowError("flow " + std::to_string(flow.id + 1) + " of size " + format_rational(flow.sigma) +
                                  " exceeds its bottleneck capacity " + format_rational(af.bottleneck));
    }
    return af;
}

struct LargeSide {
    Schedule schedule;
    int rounds = 0;
    LineStrategy strategy = LineStrategy::L1;
};

LargeSide best_large(const PathInstance& path, std::span<const AnnotatedFlow> flows,
                     std::span<const LineStrategy> strategies) {
    std::optional<LargeSide> best;
    for (auto s : strategies) {
        LargeSide side{proc_larges(path, flows, s), 0, s};
        side.rounds = side.schedule.num_rounds();
        if (!best || side.rounds < best->rounds) {
            best = std::move(side);
        }
    }
    return std::move(*best);
}

// Appends `part` to `out` with its rounds shifted past `offset`.
void append_shifted(Schedule& out, const Schedule& part, int offset) {
    Schedule compacted = part;
    compacted.compact();
    for (const auto& [id, round] : compacted.assignments()) {
        out.assign(id, round + offset);
    }
}

} // namespace

LineStrategy choose_online_strategy(const PathInstance& path, std::span<const LineStrategy> strategies) {
    if (contains(strategies, LineStrategy::L3)) {
        throw ParameterError("L3 needs the whole flow set and cannot run online");
    }
    const bool l1 = strategies.empty() || contains(strategies, LineStrategy::L1);
    const bool l2 = strategies.empty() || contains(strategies, LineStrategy::L2);
    if (l1 && l2) {
        return online_line_choice(path);
    }
    return l1 ? LineStrategy::L1 : LineStrategy::L2;
}

OnlineSolver::OnlineSolver(const PathInstance& path, LineStrategy strategy)
    : path_(path), strategy_(strategy), smalls_(path), larges_(path, strategy) {}

OnlineSolver::Assignment OnlineSolver::insert(const Flow& flow) {
    const auto af = annotate_feasible(path_, flow);
    Assignment a{};
    int local;
    if (is_large(af)) {
        a.pipeline = Pipeline::Large;
        local = larges_.insert(af);
    } else {
        a.pipeline = Pipeline::Small;
        local = smalls_.insert(af);
    }
    const auto next = static_cast<int>(registry_.size()) + 1;
    a.round = registry_.try_emplace({a.pipeline, local}, next).first->second;
    schedule_.assign(flow.id, a.round);
    return a;
}

SolveResult solve_online(const PathInstance& path, std::span<const Flow> flows, const SolverConfig& config) {
    OnlineSolver solver(path, choose_online_strategy(path, config.strategies));
    SolveResult result;
    for (const auto& f : flows) {
        result.pipeline[f.id] = solver.insert(f).pipeline;
    }
    result.schedule = solver.schedule();
    result.small_rounds = solver.small_rounds();
    result.large_rounds = solver.large_rounds();
    result.large_strategy = solver.strategy();
    return result;
}

SolveResult solve_offline(const PathInstance& path, std::span<const Flow> flows, const SolverConfig& config) {
    std::vector<LineStrategy> strategies = config.strategies;
    if (strategies.empty()) {
        strategies = {LineStrategy::L1, LineStrategy::L2, LineStrategy::L3};
    }

    SolveResult result;
    std::vector<AnnotatedFlow> smalls, larges;
    for (const auto& f : flows) {
        auto af = annotate_feasible(path, f);
        (is_large(af) ? larges : smalls).push_back(std::move(af));
    }

    const Schedule small_schedule = proc_smalls(path, smalls);
    result.small_rounds = small_schedule.num_rounds();

    Schedule mid_schedule;
    LargeSide large_side;
    if (!larges.empty()) {
        large_side = best_large(path, larges, strategies);
    }

    if (config.use_mids && !larges.empty()) {
        Rational alpha;
        if (config.alpha) {
            alpha = *config.alpha;
        } else {
            alpha = 0;
            for (const auto& f : larges) {
                alpha = std::max(alpha, Rational(f.flow.sigma / f.bottleneck));
            }
            alpha = std::min(alpha, Rational(999, 1000));
        }
        if (alpha > Rational(1, 4) && alpha < 1) {
            std::vector<AnnotatedFlow> mids, rest;
            for (const auto& f : larges) {
                (f.flow.sigma <= alpha * f.bottleneck ? mids : rest).push_back(f);
            }
            Schedule mids_only = proc_mids(path, mids, alpha);
            LargeSide rest_side;
            if (!rest.empty()) {
                rest_side = best_large(path, rest, strategies);
            }
            if (mids_only.num_rounds() + rest_side.rounds < large_side.rounds) {
                mid_schedule = std::move(mids_only);
                large_side = std::move(rest_side);
                result.mid_alpha = alpha;
            }
        }
    }

    result.mid_rounds = mid_schedule.num_rounds();
    result.large_rounds = large_side.schedule.num_rounds();
    if (result.large_rounds > 0) {
        result.large_strategy = large_side.strategy;
    }

    append_shifted(result.schedule, small_schedule, 0);
    append_shifted(result.schedule, mid_schedule, result.small_rounds);
    append_shifted(result.schedule, large_side.schedule, result.small_rounds + result.mid_rounds);
    for (const auto& [id, round] : small_schedule.assignments()) {
        result.pipeline[id] = Pipeline::Small;
    }
    for (const auto& [id, round] : mid_schedule.assignments()) {
        result.pipeline[id] = Pipeline::Mid;
    }
    for (const auto& [id, round] : large_side.schedule.assignments()) {
        result.pipeline[id] = Pipeline::Large;
    }
    return result;
}

SolveResult solve(const PathInstance& path, std::span<const Flow> flows, const SolverConfig& config) {
    return config.mode == Mode::Online ? solve_online(path, flows, config) : solve_offline(path, flows, config);
}

} // namespace rufpp
