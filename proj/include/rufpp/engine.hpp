#pragma once

#include "rufpp/large.hpp"
#include "rufpp/model.hpp"
#include "rufpp/small.hpp"

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rufpp {

enum class Mode { Online, Offline };
enum class Pipeline { Small, Mid, Large };

std::string_view to_string(Pipeline pipeline);

struct SolverConfig {
    Mode mode = Mode::Offline;
    /// Empty: every strategy the mode allows (offline L1, L2, L3; online picks L1 or L2).
    std::vector<LineStrategy> strategies;
    /// Offline only: also try routing [1/4, alpha]-mid flows through proc_mids.
    bool use_mids = true;
    /// Mid threshold; unset means min(max sigma/b over large flows, 0.999).
    std::optional<Rational> alpha;
};

struct SolveResult {
    Schedule schedule;
    std::map<FlowId, Pipeline> pipeline;
    int small_rounds = 0;
    int mid_rounds = 0;
    int large_rounds = 0;
    std::optional<LineStrategy> large_strategy;
    std::optional<Rational> mid_alpha;
};

/// Line set an online run uses for the given strategy list (empty = automatic).
LineStrategy choose_online_strategy(const PathInstance& path, std::span<const LineStrategy> strategies);

/*
 * Online solver: each arriving flow is routed to the small (sigma < b/4) or
 * large pipeline and gets a permanent round. Rounds are handed out in order
 * of first use and never shared between pipelines.
 */
class OnlineSolver {
public:
    struct Assignment {
        int round;
        Pipeline pipeline;
    };

    OnlineSolver(const PathInstance& path, LineStrategy strategy);

    /// Throws InfeasibleFlowError if sigma exceeds the flow's bottleneck.
    Assignment insert(const Flow& flow);

    const Schedule& schedule() const { return schedule_; }
    int small_rounds() const { return smalls_.num_rounds(); }
    int large_rounds() const { return larges_.num_rounds(); }
    LineStrategy strategy() const { return strategy_; }

private:
    PathInstance path_;
    LineStrategy strategy_;
    SmallFlowScheduler smalls_;
    ProcLarges larges_;
    std::map<std::pair<Pipeline, int>, int> registry_;
    Schedule schedule_;
};

SolveResult solve_online(const PathInstance& path, std::span<const Flow> flows, const SolverConfig& config = {});
SolveResult solve_offline(const PathInstance& path, std::span<const Flow> flows, const SolverConfig& config = {});

/// Dispatches on config.mode.
SolveResult solve(const PathInstance& path, std::span<const Flow> flows, const SolverConfig& config);

} // namespace rufpp
