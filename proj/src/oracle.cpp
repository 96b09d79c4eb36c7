#include "rufpp/oracle.hpp"

#include "rufpp/interval.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace rufpp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

class FlowSearch {
public:
    FlowSearch(const PathInstance& path, std::vector<Flow> order, int lower)
        : path_(path), order_(std::move(order)), lower_(lower), current_(order_.size()) {}

    void seed(std::vector<int> assignment, int rounds) {
        best_ = std::move(assignment);
        best_rounds_ = rounds;
    }

    void run() {
        if (best_rounds_ > lower_) {
            dfs(0);
        }
    }

    const std::vector<int>& best() const { return best_; }
    int best_rounds() const { return best_rounds_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool fits(const std::vector<Rational>& load, const Flow& f) const {
        for (int e = f.s + 1; e <= f.t; ++e) {
            if (load[static_cast<std::size_t>(e - 1)] + f.sigma > path_.capacity(e)) {
                return false;
            }
        }
        return true;
    }

    void add(std::vector<Rational>& load, const Flow& f, bool remove) {
        for (int e = f.s + 1; e <= f.t; ++e) {
            auto& l = load[static_cast<std::size_t>(e - 1)];
            if (remove) {
                l -= f.sigma;
            } else {
                l += f.sigma;
            }
        }
    }

    // true once an optimal (lower-bound) solution is found
    bool dfs(std::size_t idx) {
        ++nodes_;
        const int used = static_cast<int>(loads_.size());
        if (used >= best_rounds_) {
            return false;
        }
        if (idx == order_.size()) {
            best_ = current_;
            best_rounds_ = used;
            return best_rounds_ <= lower_;
        }
        const auto& f = order_[idx];
        for (int r = 0; r < used; ++r) {
            // the recursion may grow loads_, so index afresh each time
            const auto slot = static_cast<std::size_t>(r);
            if (!fits(loads_[slot], f)) {
                continue;
            }
            add(loads_[slot], f, false);
            current_[idx] = r + 1;
            const bool done = dfs(idx + 1);
            add(loads_[slot], f, true);
            if (done) {
                return true;
            }
        }
        // a new round goes right after the used ones
        if (used + 1 < best_rounds_) {
            loads_.emplace_back(static_cast<std::size_t>(path_.num_edges()));
            add(loads_.back(), f, false);
            current_[idx] = used + 1;
            const bool done = dfs(idx + 1);
            loads_.pop_back();
            if (done) {
                return true;
            }
        }
        return false;
    }

    const PathInstance& path_;
    std::vector<Flow> order_;
    int lower_;
    std::vector<std::vector<Rational>> loads_;
    std::vector<int> current_;
    std::vector<int> best_;
    int best_rounds_ = 0;
    std::uint64_t nodes_ = 0;
};

std::pair<std::vector<int>, int> first_fit(const PathInstance& path, std::span<const Flow> order) {
    std::vector<std::vector<Rational>> loads;
    std::vector<int> assignment;
    for (const auto& f : order) {
        std::size_t r = 0;
        for (; r < loads.size(); ++r) {
            bool ok = true;
            for (int e = f.s + 1; e <= f.t && ok; ++e) {
                ok = loads[r][static_cast<std::size_t>(e - 1)] + f.sigma <= path.capacity(e);
            }
            if (ok) {
                break;
            }
        }
        if (r == loads.size()) {
            loads.emplace_back(static_cast<std::size_t>(path.num_edges()));
        }
        for (int e = f.s + 1; e <= f.t; ++e) {
            loads[r][static_cast<std::size_t>(e - 1)] += f.sigma;
        }
        assignment.push_back(static_cast<int>(r) + 1);
    }
    return {assignment, static_cast<int>(loads.size())};
}

} // namespace

FlowOracleResult exact_chi(const PathInstance& path, std::span<const Flow> flows, std::size_t limit) {
    if (flows.size() > limit) {
        throw OracleLimitError("exact_chi refuses " + std::to_string(flows.size()) + " flows (limit " +
                               std::to_string(limit) + ")");
    }
    const auto start = Clock::now();
    FlowOracleResult result;
    if (flows.empty()) {
        return result;
    }
    for (const auto& f : flows) {
        const auto af = annotate(path, f);
        if (f.sigma > af.bottleneck) {
            throw InfeasibleFlowError("flow " + std::to_string(f.id + 1) + " fits in no round");
        }
    }

    std::vector<Flow> order(flows.begin(), flows.end());
    std::stable_sort(order.begin(), order.end(), [](const Flow& a, const Flow& b) { return a.sigma > b.sigma; });

    const int lower = static_cast<int>(std::max<std::int64_t>(1, lower_bound(path, flows)));
    FlowSearch search(path, order, lower);
    auto [assignment, rounds] = first_fit(path, order);
    search.seed(std::move(assignment), rounds);
    search.run();

    result.chi = search.best_rounds();
    for (std::size_t i = 0; i < order.size(); ++i) {
        result.witness.assign(order[i].id, search.best()[i]);
    }
    result.nodes = search.nodes();
    result.seconds = seconds_since(start);
    return result;
}

int rect_clique_number(std::span<const Rect> rects) {
    if (rects.empty()) {
        return 0;
    }
    // axis-parallel boxes have the Helly property: a clique shares a point,
    // so the deepest point over all x-slabs is the clique number
    std::vector<Rational> xs;
    for (const auto& r : rects) {
        xs.push_back(r.xl);
        xs.push_back(r.xr);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    int best = 0;
    std::vector<IntervalItem> active;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const Rational mid = (xs[i] + xs[i + 1]) / 2;
        active.clear();
        for (const auto& r : rects) {
            if (r.xl < mid && mid < r.xr) {
                active.push_back({r.yb, r.yt, r.id});
            }
        }
        best = std::max(best, clique_number(active));
    }
    return best;
}

RectOracleResult exact_rect_chi(std::span<const Rect> rects, std::size_t limit) {
    if (rects.size() > limit) {
        throw OracleLimitError("exact_rect_chi refuses " + std::to_string(rects.size()) + " rectangles (limit " +
                               std::to_string(limit) + ")");
    }
    const auto start = Clock::now();
    RectOracleResult result;
    const std::size_t n = rects.size();
    if (n == 0) {
        return result;
    }

    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<int> deg(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rect_intersects(rects[i], rects[j])) {
                adj[i][j] = adj[j][i] = true;
                ++deg[i];
                ++deg[j];
            }
        }
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });

    const int lower = rect_clique_number(rects);
    std::vector<int> color(n, 0);
    std::vector<int> best(n, 0);
    // greedy incumbent
    int best_count = 0;
    for (auto v : order) {
        int c = 1;
        for (bool clash = true; clash; ++c) {
            clash = false;
            for (std::size_t u = 0; u < n; ++u) {
                if (adj[v][u] && best[u] == c) {
                    clash = true;
                    break;
                }
            }
            if (!clash) {
                best[v] = c;
                break;
            }
        }
        best_count = std::max(best_count, best[v]);
    }

    std::uint64_t nodes = 0;
    auto dfs = [&](auto&& self, std::size_t idx, int used) -> bool {
        ++nodes;
        if (used >= best_count) {
            return false;
        }
        if (idx == n) {
            best = color;
            best_count = used;
            return best_count <= lower;
        }
        const auto v = order[idx];
        for (int c = 1; c <= used + 1; ++c) {
            if (c > used && used + 1 >= best_count) {
                break;
            }
            bool clash = false;
            for (std::size_t u = 0; u < n && !clash; ++u) {
                clash = adj[v][u] && color[u] == c;
            }
            if (clash) {
                continue;
            }
            color[v] = c;
            if (self(self, idx + 1, std::max(used, c))) {
                return true;
            }
            color[v] = 0;
        }
        return false;
    };
    if (best_count > lower) {
        dfs(dfs, 0, 0);
    }

    result.chi = best_count;
    result.colors = best;
    result.nodes = nodes;
    result.seconds = seconds_since(start);
    return result;
}

} // namespace rufpp
