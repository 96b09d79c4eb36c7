#pragma once

#include "rufpp/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace rufpp {

/// Open interval (lo, hi); items meeting only at an endpoint are disjoint.
struct IntervalItem {
    Rational lo;
    Rational hi;
    std::size_t id = 0;
};

inline bool intervals_intersect(const IntervalItem& a, const IntervalItem& b) {
    return a.lo < b.hi && b.lo < a.hi;
}

/// Maximum number of items covering a common point (0 for no items).
int clique_number(std::span<const IntervalItem> items);

/*
 * Online interval coloring with at most 3w - 2 colors, w the clique number
 * of the items seen so far.
 *
 * An item goes to the smallest level k >= 1 such that the items on levels
 * 1..k together with it cover no point of its interior more than k times.
 * Level 1 is an independent set and gets color 1; every deeper level induces
 * paths and is first-fit colored from its own three colors
 * 3k - 4, 3k - 3, 3k - 2.
 */
class KiersteadTrotter {
public:
    /// Permanent color (>= 1) for the item.
    int insert(const IntervalItem& item);

    /// Distinct colors handed out so far.
    int num_colors() const { return static_cast<int>(used_colors_); }
    int num_levels() const { return static_cast<int>(levels_.size()); }
    std::size_t size() const { return placed_.size(); }

private:
    struct Placed {
        IntervalItem item;
        int level;
        int color;
    };

    std::vector<Placed> placed_;
    // levels_[k - 1]: positions in placed_ of the level-k items
    std::vector<std::vector<std::size_t>> levels_;
    std::vector<bool> color_used_;
    std::size_t used_colors_ = 0;
};

/// Online first fit: lowest color not held by an intersecting item.
class FirstFitIntervals {
public:
    int insert(const IntervalItem& item);
    int num_colors() const { return max_color_; }

private:
    std::vector<std::pair<IntervalItem, int>> placed_;
    int max_color_ = 0;
};

} // namespace rufpp
