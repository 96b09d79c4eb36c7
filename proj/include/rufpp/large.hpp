#pragma once

#include "rufpp/model.hpp"
#include "rufpp/rectcol.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace rufpp {

enum class LineStrategy { L1, L2, L3 };

std::string_view to_string(LineStrategy strategy);
LineStrategy parse_line_strategy(std::string_view name);

/// Large for the pipelines: sigma >= b/4.
inline bool is_large(const AnnotatedFlow& f) { return f.flow.sigma * 4 >= f.bottleneck; }

/// (s, t, b - sigma, b): the flow hangs from the capacity profile. Throws if sigma > b.
Rect flow_to_rect(const AnnotatedFlow& flow);

/// s = ceil(log_{4/3}(c_max / c_min)) + 1.
int l1_sparsity(const PathInstance& path);

/// Horizontal lines at (3/4)^i * c_max for i = 0..s.
LineSet build_l1(const PathInstance& path);

/// Vertical lines at x = j - 1/2, one per edge.
LineSet build_l2(const PathInstance& path);

/// Horizontal line through each rectangle's vertical midpoint. Throws on empty input.
LineSet build_l3(std::span<const Rect> rects);

/// L2 when the path has fewer edges than L1's sparsity, otherwise L1.
LineStrategy online_line_choice(const PathInstance& path);

/*
 * Online rounds for 1/4-large flows: each flow becomes its rectangle and
 * takes the rectangle's RectCol color as its round.
 */
class ProcLarges {
public:
    explicit ProcLarges(LineSet lines);
    ProcLarges(const PathInstance& path, LineStrategy strategy);

    /// Throws ClassificationError for sigma < b/4, InfeasibleFlowError for sigma > b.
    int insert(const AnnotatedFlow& flow);

    int num_rounds() const { return coloring_.num_colors(); }
    const RectCol& coloring() const { return coloring_; }

private:
    RectCol coloring_;
};

/// Offline run over all flows in order; L3 is built from the flows' rectangles.
Schedule proc_larges(const PathInstance& path, std::span<const AnnotatedFlow> flows, LineStrategy strategy);

} // namespace rufpp
