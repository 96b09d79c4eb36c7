#include "rufpp/large.hpp"

#include <string>

namespace rufpp {

std::string_view to_string(LineStrategy strategy) {
    switch (strategy) {
    case LineStrategy::L1:
        return "l1";
    case LineStrategy::L2:
        return "l2";
    case LineStrategy::L3:
        return "l3";
    }
    return "?";
}

LineStrategy parse_line_strategy(std::string_view name) {
    if (name == "l1" || name == "L1") {
        return LineStrategy::L1;
    }
    if (name == "l2" || name == "L2") {
        return LineStrategy::L2;
    }
    if (name == "l3" || name == "L3") {
        return LineStrategy::L3;
    }
    throw ParameterError("unknown line strategy '" + std::string(name) + "'");
}

Rect flow_to_rect(const AnnotatedFlow& flow) {
    const auto& f = flow.flow;
    if (f.sigma > flow.bottleneck) {
        throw InfeasibleFlowError("flow " + std::to_string(f.id + 1) + " of size " + format_rational(f.sigma) +
                                  " exceeds its bottleneck " + format_rational(flow.bottleneck));
    }
    return Rect(Rational(f.s), Rational(f.t), Rational(flow.bottleneck - f.sigma), flow.bottleneck, f.id);
}

int l1_sparsity(const PathInstance& path) {
    return ceil_log(Rational(4, 3), path.capacity_ratio()) + 1;
}

LineSet build_l1(const PathInstance& path) {
    const int s = l1_sparsity(path);
    std::vector<Rational> ys(static_cast<std::size_t>(s) + 1);
    Rational y = path.c_max();
    // ascending storage: index s - i holds (3/4)^i * c_max
    for (int i = 0; i <= s; ++i) {
        ys[static_cast<std::size_t>(s - i)] = y;
        y *= Rational(3, 4);
    }
    return LineSet(Orientation::Horizontal, std::move(ys));
}

LineSet build_l2(const PathInstance& path) {
    std::vector<Rational> xs;
    xs.reserve(static_cast<std::size_t>(path.num_edges()));
    for (int j = 1; j <= path.num_edges(); ++j) {
        xs.emplace_back(2 * j - 1, 2);
    }
    return LineSet(Orientation::Vertical, std::move(xs));
}

LineSet build_l3(std::span<const Rect> rects) {
    if (rects.empty()) {
        throw ParameterError("L3 needs at least one rectangle");
    }
    std::vector<Rational> ys;
    ys.reserve(rects.size());
    for (const auto& r : rects) {
        ys.emplace_back((r.yb + r.yt) / 2);
    }
    auto lines = LineSet::from_unsorted(Orientation::Horizontal, std::move(ys));
    for (const auto& r : rects) {
        if (lines.degree(r) < 1) {
            throw SparsityError("rectangle " + std::to_string(r.id) + " misses every L3 line");
        }
    }
    return lines;
}

LineStrategy online_line_choice(const PathInstance& path) {
    return path.num_edges() < l1_sparsity(path) ? LineStrategy::L2 : LineStrategy::L1;
}

namespace {

LineSet online_lines(const PathInstance& path, LineStrategy strategy) {
    switch (strategy) {
    case LineStrategy::L1:
        return build_l1(path);
    case LineStrategy::L2:
        return build_l2(path);
    case LineStrategy::L3:
        break;
    }
    throw ParameterError("L3 needs the full flow set and is offline only");
}

} // namespace

ProcLarges::ProcLarges(LineSet lines) : coloring_(std::move(lines)) {}

ProcLarges::ProcLarges(const PathInstance& path, LineStrategy strategy)
    : coloring_(online_lines(path, strategy)) {}

int ProcLarges::insert(const AnnotatedFlow& flow) {
    if (!is_large(flow)) {
        throw ClassificationError("flow " + std::to_string(flow.id() + 1) + " is 1/4-small");
    }
    return coloring_.insert(flow_to_rect(flow));
}

Schedule proc_larges(const PathInstance& path, std::span<const AnnotatedFlow> flows, LineStrategy strategy) {
    Schedule schedule;
    if (flows.empty()) {
        return schedule;
    }
    std::vector<Rect> rects;
    rects.reserve(flows.size());
    for (const auto& f : flows) {
        if (!is_large(f)) {
            throw ClassificationError("flow " + std::to_string(f.id() + 1) + " is 1/4-small");
        }
        rects.push_back(flow_to_rect(f));
    }
    ProcLarges larges = strategy == LineStrategy::L3 ? ProcLarges(build_l3(rects)) : ProcLarges(path, strategy);
    for (const auto& f : flows) {
        schedule.assign(f.id(), larges.insert(f));
    }
    return schedule;
}

} // namespace rufpp
