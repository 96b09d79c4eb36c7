#pragma once

#include "rufpp/errors.hpp"
#include "rufpp/interval.hpp"
#include "rufpp/rational.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rufpp {

/// Axis-parallel rectangle; intersections are taken on open interiors.
struct Rect {
    Rational xl;
    Rational xr;
    Rational yb;
    Rational yt;
    std::size_t id = 0;

    Rect() = default;
    /// Throws std::invalid_argument unless xl < xr and yb < yt.
    Rect(Rational xl, Rational xr, Rational yb, Rational yt, std::size_t id = 0);
};

inline bool rect_intersects(const Rect& a, const Rect& b) {
    return a.xl < b.xr && b.xl < a.xr && a.yb < b.yt && b.yb < a.yt;
}

/// Swaps the roles of the axes.
Rect transpose(const Rect& r);

enum class Orientation { Horizontal, Vertical };

/*
 * Ordered set of parallel representative lines (y-coordinates when
 * horizontal, x-coordinates when vertical), ascending, indexed from 0.
 *
 * A horizontal line y meets a rectangle iff yb <= y < yt (vertical: xl <= x < xr).
 */
class LineSet {
public:
    /// Throws std::invalid_argument unless coords are nonempty and strictly increasing.
    LineSet(Orientation orientation, std::vector<Rational> coords);

    /// Sorts and deduplicates first.
    static LineSet from_unsorted(Orientation orientation, std::vector<Rational> coords);

    Orientation orientation() const { return orientation_; }
    std::size_t size() const { return coords_.size(); }
    const std::vector<Rational>& coords() const { return coords_; }

    /// Half-open index range [first, last) of the lines meeting the rectangle.
    std::pair<std::size_t, std::size_t> hits(const Rect& r) const;

    int degree(const Rect& r) const;

    /// Index of the topmost (largest-coordinate) line meeting r. Throws SparsityError if none.
    std::size_t topmost_index(const Rect& r) const;

    /// Keeps lines whose 1-based position j satisfies j = 1 (mod 2^level).
    LineSet subsample(int level) const;

private:
    Orientation orientation_;
    std::vector<Rational> coords_;
};

/*
 * Online coloring of rectangles each meeting one or two lines of a known set.
 * A rectangle joins residue class T mod 3 (T its topmost line) and is colored
 * by a Kierstead-Trotter instance of line T on its projection along the lines.
 * Within a residue class, different lines share one palette; the three
 * residue classes use disjoint palettes.
 */
class Col2Sp {
public:
    explicit Col2Sp(LineSet lines);

    /// Permanent color (>= 1). Throws SparsityError if r meets 0 or more than 2 lines.
    int insert(const Rect& r);

    int num_colors() const { return next_color_ - 1; }
    const LineSet& lines() const { return lines_; }

    /// Residue class and topmost line the rectangle would be assigned to.
    std::pair<int, std::size_t> bucket(const Rect& r) const;

private:
    Rect oriented(const Rect& r) const;

    LineSet lines_;
    std::map<std::size_t, KiersteadTrotter> per_line_;
    std::array<std::map<int, int>, 3> palette_;
    int next_color_ = 1;
};

/*
 * Online coloring for s-line-sparse rectangles: a rectangle of degree d goes
 * to level floor(log2 d), and each level runs Col2Sp on the lines at 1-based
 * positions 1, 1 + 2^level, 1 + 2 * 2^level, ... Levels use disjoint palettes.
 */
class RectCol {
public:
    explicit RectCol(LineSet lines);

    /// Throws SparsityError if r meets no line (degree above s cannot happen).
    int insert(const Rect& r);

    int num_colors() const { return next_color_ - 1; }
    std::size_t sparsity() const { return lines_.size(); }
    /// Levels 0..ceil(log2 s).
    int num_levels() const { return static_cast<int>(levels_.size()); }

    static int level_for_degree(int degree);

    const LineSet& lines() const { return lines_; }

private:
    LineSet lines_;
    std::vector<std::optional<Col2Sp>> levels_;
    std::map<std::pair<int, int>, int> palette_;
    int next_color_ = 1;
};

} // namespace rufpp
