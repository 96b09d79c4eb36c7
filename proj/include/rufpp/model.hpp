#pragma once

#include "rufpp/errors.hpp"
#include "rufpp/rational.hpp"
#include "rufpp/sparse_table.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace rufpp {

/// Position of a flow in its instance (0-based); stable across pipelines.
using FlowId = std::size_t;

/// Inclusive range of 1-based edge indices.
struct EdgeRange {
    int first;
    int last;

    int size() const { return last - first + 1; }
    bool contains(int edge) const { return first <= edge && edge <= last; }
    bool overlaps(const EdgeRange& other) const {
        return first <= other.last && other.first <= last;
    }
};

/*
 * A path v_0, e_1, v_1, ..., e_m, v_m with positive edge capacities.
 * Bottleneck queries run through a sparse table over the capacities.
 */
class PathInstance {
public:
    explicit PathInstance(std::vector<Rational> capacities);

    int num_edges() const { return static_cast<int>(capacities_.size()); }

    /// 1-based edge index
    const Rational& capacity(int edge) const { return capacities_[static_cast<std::size_t>(edge - 1)]; }
    std::span<const Rational> capacities() const { return capacities_; }

    const Rational& c_min() const { return c_min_; }
    const Rational& c_max() const { return c_max_; }
    Rational capacity_ratio() const { return c_max_ / c_min_; }

    /// Leftmost edge of minimum capacity within the range.
    int min_edge(const EdgeRange& range) const;

private:
    std::vector<Rational> capacities_;
    Rational c_min_;
    Rational c_max_;
    SparseTable<Rational> bottlenecks_;
};

struct Flow {
    FlowId id = 0;
    int s = 0;
    int t = 0;
    Rational sigma;
};

/// A flow together with its bottleneck capacity on a given path.
struct AnnotatedFlow {
    Flow flow;
    Rational bottleneck;
    int bottleneck_edge = 0;

    FlowId id() const { return flow.id; }
};

enum class SizeClass { Small, Large };

struct CongestionReport {
    std::vector<Rational> per_edge;
    Rational r_max;
};

/// Edges e_j with s < j <= t.
inline EdgeRange edges_used(const Flow& flow) { return {flow.s + 1, flow.t}; }

/// Throws InvalidFlowError unless 0 <= s < t <= m and sigma > 0.
void validate_flow(const PathInstance& path, const Flow& flow);

AnnotatedFlow annotate(const PathInstance& path, const Flow& flow);
std::vector<AnnotatedFlow> annotate_all(const PathInstance& path, std::span<const Flow> flows);

/// Small iff sigma <= alpha * bottleneck. Requires 0 < alpha <= 1.
SizeClass classify(const AnnotatedFlow& flow, const Rational& alpha);

CongestionReport congestion(const PathInstance& path, std::span<const Flow> flows);

/// ceil(r_max); 0 for an empty flow set.
std::int64_t lower_bound(const PathInstance& path, std::span<const Flow> flows);

/*
 * Assignment of flows to 1-based rounds.
 */
class Schedule {
public:
    void assign(FlowId flow, int round);

    bool contains(FlowId flow) const { return rounds_.contains(flow); }
    int round_of(FlowId flow) const;
    std::size_t size() const { return rounds_.size(); }
    bool empty() const { return rounds_.empty(); }

    /// Number of distinct rounds in use.
    int num_rounds() const;
    /// Largest round index in use (0 when empty).
    int max_round() const;

    /// Renumbers used rounds to 1..num_rounds preserving their order.
    void compact();

    const std::map<FlowId, int>& assignments() const { return rounds_; }

    /// Flow ids grouped by round index.
    std::map<int, std::vector<FlowId>> by_round() const;

private:
    std::map<FlowId, int> rounds_;
};

struct Violation {
    int round;
    int edge;
    Rational load;
    Rational capacity;
};

struct VerificationReport {
    bool feasible = true;
    std::vector<Violation> violations;
};

/// Capacity check of a single candidate round.
std::vector<Violation> check_round(const PathInstance& path, std::span<const Flow> round_flows,
                                   int round = 0);

/// Throws ScheduleStructureError if the schedule misses a flow or names an unknown one.
VerificationReport verify_schedule(const PathInstance& path, std::span<const Flow> flows,
                                   const Schedule& schedule);

} // namespace rufpp
