#include "rufpp/model.hpp"

#include <algorithm>
#include <set>

namespace rufpp {

PathInstance::PathInstance(std::vector<Rational> capacities) : capacities_(std::move(capacities)) {
    if (capacities_.empty()) {
        throw InvalidFlowError("path needs at least one edge");
    }
    for (std::size_t j = 0; j < capacities_.size(); ++j) {
        if (capacities_[j] <= 0) {
            throw InvalidFlowError("capacity of edge " + std::to_string(j + 1) + " is not positive");
        }
    }
    c_min_ = *std::min_element(capacities_.begin(), capacities_.end());
    c_max_ = *std::max_element(capacities_.begin(), capacities_.end());
    bottlenecks_ = SparseTable<Rational>(capacities_);
}

int PathInstance::min_edge(const EdgeRange& range) const {
    return static_cast<int>(bottlenecks_.range_arg_min(static_cast<std::size_t>(range.first - 1),
                                                       static_cast<std::size_t>(range.last - 1))) +
           1;
}

void validate_flow(const PathInstance& path, const Flow& flow) {
    const auto name = "flow " + std::to_string(flow.id + 1);
    if (flow.s < 0 || flow.t > path.num_edges()) {
        throw InvalidFlowError(name + " has endpoints outside [0, " + std::to_string(path.num_edges()) + "]");
    }
    if (flow.s >= flow.t) {
        throw InvalidFlowError(name + " must satisfy s < t");
    }
    if (flow.sigma <= 0) {
        throw InvalidFlowError(name + " has non-positive size");
    }
}

AnnotatedFlow annotate(const PathInstance& path, const Flow& flow) {
    validate_flow(path, flow);
    const int edge = path.min_edge(edges_used(flow));
    return AnnotatedFlow{flow, path.capacity(edge), edge};
}

std::vector<AnnotatedFlow> annotate_all(const PathInstance& path, std::span<const Flow> flows) {
    std::vector<AnnotatedFlow> out;
    out.reserve(flows.size());
    for (const auto& f : flows) {
        out.push_back(annotate(path, f));
    }
    return out;
}

SizeClass classify(const AnnotatedFlow& flow, const Rational& alpha) {
    if (alpha <= 0 || alpha > 1) {
        throw ParameterError("alpha must lie in (0, 1]");
    }
    return flow.flow.sigma <= alpha * flow.bottleneck ? SizeClass::Small : SizeClass::Large;
}

CongestionReport congestion(const PathInstance& path, std::span<const Flow> flows) {
    const auto m = static_cast<std::size_t>(path.num_edges());
    // difference array over edges 1..m
    std::vector<Rational> delta(m + 1);
    for (const auto& f : flows) {
        delta[static_cast<std::size_t>(f.s)] += f.sigma;
        delta[static_cast<std::size_t>(f.t)] -= f.sigma;
    }
    CongestionReport report;
    report.per_edge.resize(m);
    Rational running = 0;
    for (std::size_t j = 0; j < m; ++j) {
        running += delta[j];
        report.per_edge[j] = running / path.capacities()[j];
        if (report.per_edge[j] > report.r_max) {
            report.r_max = report.per_edge[j];
        }
    }
    return report;
}

std::int64_t lower_bound(const PathInstance& path, std::span<const Flow> flows) {
    if (flows.empty()) {
        return 0;
    }
    const auto r = congestion(path, flows).r_max;
    mpz_class ceiling;
    mpz_cdiv_q(ceiling.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return ceiling.get_si();
}

void Schedule::assign(FlowId flow, int round) {
    if (round < 1) {
        throw ScheduleStructureError("round indices are 1-based");
    }
    rounds_[flow] = round;
}

int Schedule::round_of(FlowId flow) const {
    auto it = rounds_.find(flow);
    if (it == rounds_.end()) {
        throw ScheduleStructureError("flow " + std::to_string(flow + 1) + " is not scheduled");
    }
    return it->second;
}

int Schedule::num_rounds() const {
    std::set<int> used;
    for (const auto& [flow, round] : rounds_) {
        used.insert(round);
    }
    return static_cast<int>(used.size());
}

int Schedule::max_round() const {
    int best = 0;
    for (const auto& [flow, round] : rounds_) {
        best = std::max(best, round);
    }
    return best;
}

void Schedule::compact() {
    std::map<int, int> renumber;
    for (const auto& [flow, round] : rounds_) {
        renumber.emplace(round, 0);
    }
    int next = 1;
    for (auto& [old_round, new_round] : renumber) {
        new_round = next++;
    }
    for (auto& [flow, round] : rounds_) {
        round = renumber[round];
    }
}

std::map<int, std::vector<FlowId>> Schedule::by_round() const {
    std::map<int, std::vector<FlowId>> groups;
    for (const auto& [flow, round] : rounds_) {
        groups[round].push_back(flow);
    }
    return groups;
}

std::vector<Violation> check_round(const PathInstance& path, std::span<const Flow> round_flows, int round) {
    std::vector<Violation> violations;
    if (round_flows.empty()) {
        return violations;
    }
    const auto loads = congestion(path, round_flows);
    for (std::size_t j = 0; j < loads.per_edge.size(); ++j) {
        if (loads.per_edge[j] > 1) {
            const auto& cap = path.capacities()[j];
            violations.push_back({round, static_cast<int>(j + 1), loads.per_edge[j] * cap, cap});
        }
    }
    return violations;
}

VerificationReport verify_schedule(const PathInstance& path, std::span<const Flow> flows,
                                   const Schedule& schedule) {
    std::map<FlowId, const Flow*> by_id;
    for (const auto& f : flows) {
        by_id.emplace(f.id, &f);
        if (!schedule.contains(f.id)) {
            throw ScheduleStructureError("flow " + std::to_string(f.id + 1) + " is not scheduled");
        }
    }
    for (const auto& [id, round] : schedule.assignments()) {
        if (!by_id.contains(id)) {
            throw ScheduleStructureError("schedule names unknown flow " + std::to_string(id + 1));
        }
    }

    VerificationReport report;
    for (const auto& [round, ids] : schedule.by_round()) {
        std::vector<Flow> members;
        members.reserve(ids.size());
        for (auto id : ids) {
            members.push_back(*by_id.at(id));
        }
        auto found = check_round(path, members, round);
        report.violations.insert(report.violations.end(), found.begin(), found.end());
    }
    report.feasible = report.violations.empty();
    return report;
}

} // namespace rufpp
