#pragma once

// Random rectangles with a prescribed number of representative lines
// crossing each of them.

#include "rufpp/rectcol.hpp"

#include "support.hpp"

namespace rufpp::testing {

/// Horizontal lines at y = 1, 2, ..., count.
inline LineSet integer_lines(int count) {
    std::vector<Rational> ys;
    for (int i = 1; i <= count; ++i) {
        ys.emplace_back(i);
    }
    return LineSet(Orientation::Horizontal, ys);
}

/*
 * Rectangle crossed by exactly `degree` of the lines y = 1..count: its
 * bottom lies in [first, first + 1) quarter steps and its top in
 * (first + degree - 1, first + degree] (clipped at the last line).
 */
inline Rect rect_with_degree(TestRng& rng, int count, int degree, long x_range, long max_width, std::size_t id) {
    const long first = rng.between(1, count - degree + 1);
    const long last = first + degree - 1;
    const Rational yb = Rational(4 * first - rng.between(0, 3), 4);
    const Rational yt = Rational(4 * last + rng.between(1, 4), 4);
    const long xl = rng.between(0, x_range - 1);
    const long xr = xl + rng.between(1, max_width);
    return Rect(Rational(xl), Rational(xr), yb, yt, id);
}

inline std::vector<Rect> random_sparse_rects(TestRng& rng, int count, int max_degree, int n, long x_range,
                                             long max_width) {
    std::vector<Rect> rects;
    for (int i = 0; i < n; ++i) {
        const int d = static_cast<int>(rng.between(1, std::min(max_degree, count)));
        rects.push_back(rect_with_degree(rng, count, d, x_range, max_width, static_cast<std::size_t>(i)));
    }
    return rects;
}

} // namespace rufpp::testing
