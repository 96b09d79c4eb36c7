#include "rufpp/rectcol.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace rufpp {

Rect::Rect(Rational xl_, Rational xr_, Rational yb_, Rational yt_, std::size_t id_)
    : xl(std::move(xl_)), xr(std::move(xr_)), yb(std::move(yb_)), yt(std::move(yt_)), id(id_) {
    if (!(xl < xr) || !(yb < yt)) {
        throw std::invalid_argument("degenerate rectangle " + std::to_string(id));
    }
}

Rect transpose(const Rect& r) {
    Rect t;
    t.xl = r.yb;
    t.xr = r.yt;
    t.yb = r.xl;
    t.yt = r.xr;
    t.id = r.id;
    return t;
}

LineSet::LineSet(Orientation orientation, std::vector<Rational> coords)
    : orientation_(orientation), coords_(std::move(coords)) {
    if (coords_.empty()) {
        throw std::invalid_argument("line set must be nonempty");
    }
    for (std::size_t i = 1; i < coords_.size(); ++i) {
        if (!(coords_[i - 1] < coords_[i])) {
            throw std::invalid_argument("line coordinates must be strictly increasing");
        }
    }
}

LineSet LineSet::from_unsorted(Orientation orientation, std::vector<Rational> coords) {
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    return LineSet(orientation, std::move(coords));
}

std::pair<std::size_t, std::size_t> LineSet::hits(const Rect& r) const {
    const auto& low = orientation_ == Orientation::Horizontal ? r.yb : r.xl;
    const auto& high = orientation_ == Orientation::Horizontal ? r.yt : r.xr;
    const auto first = std::lower_bound(coords_.begin(), coords_.end(), low);
    const auto last = std::lower_bound(first, coords_.end(), high);
    return {static_cast<std::size_t>(first - coords_.begin()), static_cast<std::size_t>(last - coords_.begin())};
}

int LineSet::degree(const Rect& r) const {
    const auto [first, last] = hits(r);
    return static_cast<int>(last - first);
}

std::size_t LineSet::topmost_index(const Rect& r) const {
    const auto [first, last] = hits(r);
    if (first == last) {
        throw SparsityError("rectangle " + std::to_string(r.id) + " meets no representative line");
    }
    return last - 1;
}

LineSet LineSet::subsample(int level) const {
    if (level < 0) {
        throw std::invalid_argument("subsample level must be non-negative");
    }
    const std::size_t stride = std::size_t{1} << level;
    std::vector<Rational> kept;
    for (std::size_t i = 0; i < coords_.size(); i += stride) {
        kept.push_back(coords_[i]);
    }
    return LineSet(orientation_, std::move(kept));
}

Col2Sp::Col2Sp(LineSet lines) : lines_(std::move(lines)) {}

Rect Col2Sp::oriented(const Rect& r) const {
    return lines_.orientation() == Orientation::Horizontal ? r : transpose(r);
}

std::pair<int, std::size_t> Col2Sp::bucket(const Rect& r) const {
    const int deg = lines_.degree(r);
    if (deg < 1 || deg > 2) {
        throw SparsityError("rectangle " + std::to_string(r.id) + " meets " + std::to_string(deg) +
                            " lines of a 2-line-representative set");
    }
    const auto top = lines_.topmost_index(r);
    return {static_cast<int>(top % 3), top};
}

int Col2Sp::insert(const Rect& r) {
    const auto [residue, top] = bucket(r);
    const Rect o = oriented(r);
    const int local = per_line_[top].insert(IntervalItem{o.xl, o.xr, r.id});
    auto [it, fresh] = palette_[static_cast<std::size_t>(residue)].try_emplace(local, next_color_);
    if (fresh) {
        ++next_color_;
    }
    return it->second;
}

RectCol::RectCol(LineSet lines) : lines_(std::move(lines)) {
    const auto s = lines_.size();
    // ceil(log2 s) + 1 levels
    const int top_level = s <= 1 ? 0 : static_cast<int>(std::bit_width(s - 1));
    levels_.resize(static_cast<std::size_t>(top_level) + 1);
}

int RectCol::level_for_degree(int degree) {
    if (degree < 1) {
        throw SparsityError("degree must be positive");
    }
    return static_cast<int>(std::bit_width(static_cast<unsigned>(degree))) - 1;
}

int RectCol::insert(const Rect& r) {
    const int deg = lines_.degree(r);
    if (deg < 1) {
        throw SparsityError("rectangle " + std::to_string(r.id) + " meets no representative line");
    }
    const int level = level_for_degree(deg);
    auto& slot = levels_.at(static_cast<std::size_t>(level));
    if (!slot) {
        slot.emplace(lines_.subsample(level));
    }
    const int local = slot->insert(r);
    auto [it, fresh] = palette_.try_emplace({level, local}, next_color_);
    if (fresh) {
        ++next_color_;
    }
    return it->second;
}

} // namespace rufpp
