#pragma once

// Shared helpers for the test suites: literal builders, a seeded random
// source, and brute-force reference solvers that share no code with the
// library's own algorithms.

#include "rufpp/model.hpp"
#include "rufpp/rectcol.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace rufpp::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline PathInstance path_of(std::initializer_list<long> caps) {
    std::vector<Rational> v;
    for (long c : caps) {
        v.emplace_back(c);
    }
    return PathInstance(std::move(v));
}

inline Flow flow(FlowId id, int s, int t, const Rational& sigma) { return Flow{id, s, t, sigma}; }

class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : engine_(seed) {}

    long between(long lo, long hi) {
        return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool coin() { return between(0, 1) == 1; }

    /// Multiple of 1/den in [lo, hi].
    Rational grid(long lo_num, long hi_num, long den) { return Rational(between(lo_num, hi_num), den); }

private:
    std::mt19937_64 engine_;
};

/// Capacities that are powers of two in [1, 2^max_exp].
inline std::vector<Rational> random_caps(TestRng& rng, int m, int max_exp) {
    std::vector<Rational> caps;
    for (int i = 0; i < m; ++i) {
        caps.emplace_back(1L << rng.between(0, max_exp));
    }
    return caps;
}

/// Random endpoints; size = b * k / den with k drawn from [k_lo, k_hi].
inline std::vector<Flow> random_flows(TestRng& rng, const PathInstance& path, int n, long k_lo, long k_hi, long den,
                                      int max_span = 0) {
    const int m = path.num_edges();
    const int span = max_span > 0 ? max_span : m;
    std::vector<Flow> flows;
    for (int i = 0; i < n; ++i) {
        const int s = static_cast<int>(rng.between(0, m - 1));
        const int t = s + static_cast<int>(rng.between(1, std::min(span, m - s)));
        Rational b = path.capacity(s + 1);
        for (int e = s + 1; e <= t; ++e) {
            b = std::min(b, Rational(path.capacity(e)));
        }
        Rational sigma = b * Rational(rng.between(k_lo, k_hi), den);
        sigma.canonicalize();
        flows.push_back(Flow{static_cast<FlowId>(i), s, t, sigma});
    }
    return flows;
}

/// Per-edge load check written directly from the definition.
inline bool round_fits(const PathInstance& path, const std::vector<Flow>& members) {
    for (int e = 1; e <= path.num_edges(); ++e) {
        Rational load = 0;
        for (const auto& f : members) {
            if (f.s < e && e <= f.t) {
                load += f.sigma;
            }
        }
        if (load > path.capacity(e)) {
            return false;
        }
    }
    return true;
}

/// Minimum number of feasible rounds by enumerating every set partition.
inline int brute_force_chi(const PathInstance& path, const std::vector<Flow>& flows) {
    const std::size_t n = flows.size();
    if (n == 0) {
        return 0;
    }
    int best = static_cast<int>(n) + 1;
    std::vector<int> label(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int blocks) {
        if (blocks >= best) {
            return;
        }
        if (i == n) {
            std::vector<std::vector<Flow>> parts(static_cast<std::size_t>(blocks));
            for (std::size_t k = 0; k < n; ++k) {
                parts[static_cast<std::size_t>(label[k])].push_back(flows[k]);
            }
            for (const auto& p : parts) {
                if (!round_fits(path, p)) {
                    return;
                }
            }
            best = blocks;
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            label[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
    return best;
}

/// Minimum number of bins of capacity `cap` holding the items (exhaustive).
inline int brute_force_bins(const Rational& cap, std::vector<Rational> items) {
    std::sort(items.begin(), items.end(), std::greater<>());
    int best = static_cast<int>(items.size());
    std::vector<Rational> bins;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (static_cast<int>(bins.size()) >= best) {
            return;
        }
        if (i == items.size()) {
            best = static_cast<int>(bins.size());
            return;
        }
        for (std::size_t k = 0; k < bins.size(); ++k) {
            if (bins[k] + items[i] <= cap) {
                bins[k] += items[i];
                rec(i + 1);
                bins[k] -= items[i];
            }
        }
        bins.push_back(items[i]);
        rec(i + 1);
        bins.pop_back();
    };
    if (items.empty()) {
        return 0;
    }
    rec(0);
    return best;
}

/// Minimum proper coloring of the rectangles' intersection graph by set partitions.
inline int brute_force_rect_chi(const std::vector<Rect>& rects) {
    const std::size_t n = rects.size();
    if (n == 0) {
        return 0;
    }
    int best = static_cast<int>(n);
    std::vector<int> label(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int blocks) {
        if (blocks >= best) {
            return;
        }
        if (i == n) {
            best = blocks;
            return;
        }
        for (int b = 0; b <= blocks && b + 1 < best + 1; ++b) {
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k) {
                ok = !(label[k] == b && rect_intersects(rects[k], rects[i]));
            }
            if (ok) {
                label[i] = b;
                rec(i + 1, std::max(blocks, b + 1));
            }
        }
    };
    rec(0, 0);
    return best;
}

/// Deepest point over a grid of candidate points between distinct coordinates.
inline int brute_force_rect_depth(const std::vector<Rect>& rects) {
    std::vector<Rational> xs, ys;
    for (const auto& r : rects) {
        xs.push_back(r.xl);
        xs.push_back(r.xr);
        ys.push_back(r.yb);
        ys.push_back(r.yt);
    }
    auto mids = [](std::vector<Rational> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        std::vector<Rational> out;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            out.push_back((v[i] + v[i + 1]) / 2);
        }
        return out;
    };
    int best = 0;
    for (const auto& x : mids(xs)) {
        for (const auto& y : mids(ys)) {
            int depth = 0;
            for (const auto& r : rects) {
                depth += (r.xl < x && x < r.xr && r.yb < y && y < r.yt) ? 1 : 0;
            }
            best = std::max(best, depth);
        }
    }
    return best;
}

/// Point depth of open intervals, probing midpoints between distinct endpoints.
template <typename Items>
int brute_force_interval_depth(const Items& items) {
    std::vector<Rational> pts;
    for (const auto& it : items) {
        pts.push_back(it.lo);
        pts.push_back(it.hi);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    int best = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Rational x = (pts[i] + pts[i + 1]) / 2;
        int depth = 0;
        for (const auto& it : items) {
            depth += (it.lo < x && x < it.hi) ? 1 : 0;
        }
        best = std::max(best, depth);
    }
    return best;
}

} // namespace rufpp::testing
