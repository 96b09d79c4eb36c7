#pragma once

#include "rufpp/model.hpp"

#include <span>
#include <vector>

namespace rufpp {

/// Two disjoint flow sets, each using every edge at most once.
struct CoverPair {
    std::vector<FlowId> c1;
    std::vector<FlowId> c2;
};

struct ClassDecomposition {
    int class_index = 1;
    std::vector<CoverPair> pairs;
};

/*
 * Parameters of the mid-flow pipeline. tau = ceil(log2(1/(1-alpha))) + 2 is
 * the stride at which bottleneck classes are merged into a shared round.
 */
class MidParams {
public:
    /// Requires 1/4 < alpha < 1.
    explicit MidParams(Rational alpha);
    /// Explicit tau, for exercising col_optimize directly. Requires tau >= 1.
    MidParams(Rational alpha, int tau);

    const Rational& alpha() const { return alpha_; }
    int tau() const { return tau_; }

    static int tau_for(const Rational& alpha);

private:
    Rational alpha_;
    int tau_;
};

/// Class i holds bottlenecks b with 2^(i-1) <= b / c_min < 2^i.
int bottleneck_class(const PathInstance& path, const Rational& bottleneck);

/*
 * Greedy chain over the flows: start from the longest flow with the leftmost
 * source, then repeatedly take the flow reaching furthest right among those
 * starting at or before the current sink, or, when none extends past it, the
 * longest flow with the next source. Returns positions into `flows` in chain
 * order. Ties go to the lowest flow id. Throws on empty input.
 */
std::vector<std::size_t> cover_chain(std::span<const AnnotatedFlow> flows);

/// Odd chain positions form c1, even ones c2.
CoverPair r_cover(std::span<const AnnotatedFlow> flows);

/// Peels cover pairs off the class until no flow remains.
ClassDecomposition flow_dec(int class_index, std::span<const AnnotatedFlow> class_flows);

/// Merges classes congruent modulo tau pair by pair; one round per nonempty merged set.
Schedule col_optimize(std::span<const ClassDecomposition> per_class, const MidParams& params);

/// Offline schedule for flows with b/4 <= sigma <= alpha * b.
Schedule proc_mids(const PathInstance& path, std::span<const AnnotatedFlow> flows, const Rational& alpha);

/*
 * Small-flow scheduler (sigma <= b/4). Flows are grouped by bottleneck class;
 * class j may load edge e up to c_e * 2^(j - T(e) - 1), where T(e) is the
 * class of c_e itself, so per-class rounds with the same index can share one
 * global round. Within a class, first fit.
 */
class SmallFlowScheduler {
public:
    explicit SmallFlowScheduler(const PathInstance& path);

    /// Permanent 1-based round for the flow. Throws ClassificationError if sigma > b/4.
    int insert(const AnnotatedFlow& flow);

    int num_rounds() const { return num_rounds_; }

private:
    const std::vector<Rational>& budget(int class_index);

    PathInstance path_;
    std::vector<int> edge_class_;
    // budgets_[j][e - 1]: load allowance of class j on edge e
    std::vector<std::vector<Rational>> budgets_;
    // rounds_[j][r]: per-edge load of class j in its round r + 1
    std::vector<std::vector<std::vector<Rational>>> rounds_;
    int num_rounds_ = 0;
};

/// Offline: first fit in decreasing size order.
Schedule proc_smalls(const PathInstance& path, std::span<const AnnotatedFlow> flows);

} // namespace rufpp
