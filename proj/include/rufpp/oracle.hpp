#pragma once

#include "rufpp/model.hpp"
#include "rufpp/rectcol.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rufpp {

inline constexpr std::size_t kDefaultFlowOracleLimit = 10;
inline constexpr std::size_t kDefaultRectOracleLimit = 12;

struct FlowOracleResult {
    int chi = 0;
    Schedule witness;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

struct RectOracleResult {
    int chi = 0;
    /// colors[i] (1-based) for rects[i]
    std::vector<int> colors;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

/*
 * Minimum number of rounds by branch and bound: flows in decreasing size
 * order go into an existing round with room on every edge or into one new
 * round. Starts from first fit; stops early on reaching ceil(r_max).
 * Throws OracleLimitError above `limit` flows, InfeasibleFlowError if some
 * flow exceeds its bottleneck.
 */
FlowOracleResult exact_chi(const PathInstance& path, std::span<const Flow> flows,
                           std::size_t limit = kDefaultFlowOracleLimit);

/// Maximum number of rectangles sharing an interior point (exact clique number).
int rect_clique_number(std::span<const Rect> rects);

/// Minimum proper coloring of the rectangles' intersection graph.
RectOracleResult exact_rect_chi(std::span<const Rect> rects, std::size_t limit = kDefaultRectOracleLimit);

} // namespace rufpp
