#include "rufpp/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rufpp {

namespace {

// Max overlap of open intervals given as (lo, hi) pairs.
int max_overlap(std::vector<std::pair<Rational, int>>& events) {
    // at equal coordinates closings (-1) sort before openings (+1)
    std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
        const int c = cmp(a.first, b.first);
        return c != 0 ? c < 0 : a.second < b.second;
    });
    int depth = 0;
    int best = 0;
    for (const auto& [x, delta] : events) {
        depth += delta;
        best = std::max(best, depth);
    }
    return best;
}

} // namespace

int clique_number(std::span<const IntervalItem> items) {
    std::vector<std::pair<Rational, int>> events;
    events.reserve(items.size() * 2);
    for (const auto& it : items) {
        events.emplace_back(it.lo, +1);
        events.emplace_back(it.hi, -1);
    }
    return max_overlap(events);
}

int KiersteadTrotter::insert(const IntervalItem& item) {
    if (!(item.lo < item.hi)) {
        throw std::invalid_argument("interval needs lo < hi");
    }

    // placed items meeting the new one, clipped to its interior
    std::vector<std::pair<const Placed*, std::pair<Rational, Rational>>> clipped;
    std::vector<Rational> coords{item.lo, item.hi};
    for (const auto& p : placed_) {
        if (intervals_intersect(p.item, item)) {
            clipped.push_back({&p, {std::max(p.item.lo, item.lo), std::min(p.item.hi, item.hi)}});
            coords.push_back(clipped.back().second.first);
            coords.push_back(clipped.back().second.second);
        }
    }
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    auto rank = [&](const Rational& x) {
        return static_cast<std::size_t>(std::lower_bound(coords.begin(), coords.end(), x) - coords.begin());
    };

    // items by level as cell ranges [lo, hi) between consecutive coordinates
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cells(levels_.size());
    for (const auto& [p, span] : clipped) {
        cells[static_cast<std::size_t>(p->level - 1)].emplace_back(rank(span.first), rank(span.second));
    }

    // load of levels 1..k on each cell, grown one level at a time
    std::vector<int> load(coords.size(), 0);
    int level = 1;
    for (;; ++level) {
        if (static_cast<std::size_t>(level) > cells.size()) {
            break;
        }
        int worst = 0;
        for (const auto& [lo, hi] : cells[static_cast<std::size_t>(level - 1)]) {
            for (auto c = lo; c < hi; ++c) {
                ++load[c];
            }
        }
        for (int x : load) {
            worst = std::max(worst, x);
        }
        if (worst + 1 <= level) {
            break;
        }
    }

    if (static_cast<std::size_t>(level) > levels_.size()) {
        levels_.resize(static_cast<std::size_t>(level));
    }

    int color;
    if (level == 1) {
        color = 1;
    } else {
        const int base = 3 * level - 4;
        bool taken[3] = {false, false, false};
        for (auto pos : levels_[static_cast<std::size_t>(level - 1)]) {
            const auto& p = placed_[pos];
            if (intervals_intersect(p.item, item)) {
                taken[p.color - base] = true;
            }
        }
        int slot = 0;
        while (slot < 3 && taken[slot]) {
            ++slot;
        }
        if (slot == 3) {
            throw std::logic_error("level palette exhausted; level graph is not a path forest");
        }
        color = base + slot;
    }

    levels_[static_cast<std::size_t>(level - 1)].push_back(placed_.size());
    placed_.push_back({item, level, color});
    if (color_used_.size() <= static_cast<std::size_t>(color)) {
        color_used_.resize(static_cast<std::size_t>(color) + 1, false);
    }
    if (!color_used_[static_cast<std::size_t>(color)]) {
        color_used_[static_cast<std::size_t>(color)] = true;
        ++used_colors_;
    }
    return color;
}

int FirstFitIntervals::insert(const IntervalItem& item) {
    std::vector<bool> taken(static_cast<std::size_t>(max_color_) + 2, false);
    for (const auto& [other, color] : placed_) {
        if (intervals_intersect(other, item)) {
            taken[static_cast<std::size_t>(color)] = true;
        }
    }
    int color = 1;
    while (taken[static_cast<std::size_t>(color)]) {
        ++color;
    }
    placed_.emplace_back(item, color);
    max_color_ = std::max(max_color_, color);
    return color;
}

} // namespace rufpp
