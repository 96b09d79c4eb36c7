#include "rufpp/small.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace rufpp {

MidParams::MidParams(Rational alpha) : alpha_(std::move(alpha)), tau_(0) {
    if (alpha_ <= Rational(1, 4) || alpha_ >= 1) {
        throw ParameterError("mid alpha must lie in (1/4, 1), got " + format_rational(alpha_));
    }
    tau_ = tau_for(alpha_);
}

MidParams::MidParams(Rational alpha, int tau) : alpha_(std::move(alpha)), tau_(tau) {
    if (tau_ < 1) {
        throw ParameterError("tau must be at least 1");
    }
}

int MidParams::tau_for(const Rational& alpha) {
    if (alpha >= 1) {
        throw ParameterError("tau is unbounded for alpha >= 1");
    }
    // 2^(tau - 2) >= 1 / (1 - alpha)
    return ceil_log(Rational(2), Rational(1 / (1 - alpha))) + 2;
}

int bottleneck_class(const PathInstance& path, const Rational& bottleneck) {
    return floor_log2(Rational(bottleneck / path.c_min())) + 1;
}

std::vector<std::size_t> cover_chain(std::span<const AnnotatedFlow> flows) {
    if (flows.empty()) {
        throw ParameterError("r_cover needs at least one flow");
    }
    const std::size_t n = flows.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& fa = flows[a].flow;
        const auto& fb = flows[b].flow;
        return fa.s != fb.s ? fa.s < fb.s : fa.id < fb.id;
    });

    auto better = [&](std::size_t a, std::size_t b) {
        const auto& fa = flows[a].flow;
        const auto& fb = flows[b].flow;
        return fa.t != fb.t ? fa.t > fb.t : fa.id < fb.id;
    };
    // longest flow among those with source order[from].s
    auto longest_from = [&](std::size_t from) {
        std::size_t pick = order[from];
        for (std::size_t p = from; p < n && flows[order[p]].flow.s == flows[order[from]].flow.s; ++p) {
            if (better(order[p], pick)) {
                pick = order[p];
            }
        }
        return pick;
    };

    std::vector<bool> chosen(n, false);
    std::vector<std::size_t> chain{longest_from(0)};
    chosen[chain.back()] = true;
    int current_t = flows[chain.back()].flow.t;

    std::size_t scan = 0;
    std::optional<std::size_t> candidate;
    while (true) {
        for (; scan < n && flows[order[scan]].flow.s <= current_t; ++scan) {
            const auto idx = order[scan];
            if (!chosen[idx] && flows[idx].flow.t > current_t && (!candidate || better(idx, *candidate))) {
                candidate = idx;
            }
        }
        std::size_t next;
        if (candidate) {
            next = *candidate;
            candidate.reset();
        } else if (scan < n) {
            next = longest_from(scan);
        } else {
            break;
        }
        chosen[next] = true;
        chain.push_back(next);
        current_t = flows[next].flow.t;
    }
    return chain;
}

CoverPair r_cover(std::span<const AnnotatedFlow> flows) {
    const auto chain = cover_chain(flows);
    CoverPair pair;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        (k % 2 == 0 ? pair.c1 : pair.c2).push_back(flows[chain[k]].id());
    }
    return pair;
}

ClassDecomposition flow_dec(int class_index, std::span<const AnnotatedFlow> class_flows) {
    ClassDecomposition dec;
    dec.class_index = class_index;
    std::vector<AnnotatedFlow> residue(class_flows.begin(), class_flows.end());
    while (!residue.empty()) {
        const auto chain = cover_chain(residue);
        CoverPair pair;
        std::vector<bool> taken(residue.size(), false);
        for (std::size_t k = 0; k < chain.size(); ++k) {
            (k % 2 == 0 ? pair.c1 : pair.c2).push_back(residue[chain[k]].id());
            taken[chain[k]] = true;
        }
        std::vector<AnnotatedFlow> rest;
        rest.reserve(residue.size() - chain.size());
        for (std::size_t i = 0; i < residue.size(); ++i) {
            if (!taken[i]) {
                rest.push_back(std::move(residue[i]));
            }
        }
        residue = std::move(rest);
        dec.pairs.push_back(std::move(pair));
    }
    return dec;
}

Schedule col_optimize(std::span<const ClassDecomposition> per_class, const MidParams& params) {
    const int tau = params.tau();
    std::size_t max_pairs = 0;
    for (const auto& dec : per_class) {
        if (dec.class_index < 1) {
            throw ParameterError("class indices are 1-based");
        }
        max_pairs = std::max(max_pairs, dec.pairs.size());
    }

    Schedule schedule;
    int round = 0;
    for (std::size_t i = 0; i < max_pairs; ++i) {
        for (int side = 0; side < 2; ++side) {
            for (int k = 1; k <= tau; ++k) {
                // D^i_side(k): classes k, k + tau, k + 2 tau, ...
                std::vector<FlowId> merged;
                for (const auto& dec : per_class) {
                    if ((dec.class_index - 1) % tau + 1 != k || i >= dec.pairs.size()) {
                        continue;
                    }
                    const auto& part = side == 0 ? dec.pairs[i].c1 : dec.pairs[i].c2;
                    merged.insert(merged.end(), part.begin(), part.end());
                }
                if (merged.empty()) {
                    continue;
                }
                ++round;
                for (auto id : merged) {
                    schedule.assign(id, round);
                }
            }
        }
    }
    return schedule;
}

Schedule proc_mids(const PathInstance& path, std::span<const AnnotatedFlow> flows, const Rational& alpha) {
    const MidParams params(alpha);
    std::map<int, std::vector<AnnotatedFlow>> classes;
    for (const auto& f : flows) {
        if (f.flow.sigma * 4 < f.bottleneck || f.flow.sigma > alpha * f.bottleneck) {
            throw ClassificationError("flow " + std::to_string(f.id() + 1) + " is not [1/4, " +
                                      format_rational(alpha) + "]-mid");
        }
        classes[bottleneck_class(path, f.bottleneck)].push_back(f);
    }
    std::vector<ClassDecomposition> decs;
    decs.reserve(classes.size());
    for (const auto& [index, members] : classes) {
        decs.push_back(flow_dec(index, members));
    }
    return col_optimize(decs, params);
}

SmallFlowScheduler::SmallFlowScheduler(const PathInstance& path) : path_(path) {
    edge_class_.reserve(static_cast<std::size_t>(path.num_edges()));
    for (int e = 1; e <= path.num_edges(); ++e) {
        edge_class_.push_back(bottleneck_class(path, path.capacity(e)));
    }
}

const std::vector<Rational>& SmallFlowScheduler::budget(int class_index) {
    const auto j = static_cast<std::size_t>(class_index);
    if (budgets_.size() <= j) {
        budgets_.resize(j + 1);
        rounds_.resize(j + 1);
    }
    auto& b = budgets_[j];
    if (b.empty()) {
        b.reserve(edge_class_.size());
        for (int e = 1; e <= path_.num_edges(); ++e) {
            // geometric in the class gap, summing to less than c_e over all classes
            b.push_back(path_.capacity(e) * pow(Rational(2), class_index - edge_class_[static_cast<std::size_t>(e - 1)] - 1));
        }
    }
    return b;
}

int SmallFlowScheduler::insert(const AnnotatedFlow& flow) {
    if (flow.flow.sigma * 4 > flow.bottleneck) {
        throw ClassificationError("flow " + std::to_string(flow.id() + 1) + " is not 1/4-small");
    }
    const int j = bottleneck_class(path_, flow.bottleneck);
    const auto& allowance = budget(j);
    auto& class_rounds = rounds_[static_cast<std::size_t>(j)];
    const auto used = edges_used(flow.flow);

    auto fits = [&](const std::vector<Rational>& load) {
        for (int e = used.first; e <= used.last; ++e) {
            const auto idx = static_cast<std::size_t>(e - 1);
            if (load[idx] + flow.flow.sigma > allowance[idx]) {
                return false;
            }
        }
        return true;
    };

    std::size_t r = 0;
    while (r < class_rounds.size() && !fits(class_rounds[r])) {
        ++r;
    }
    if (r == class_rounds.size()) {
        class_rounds.emplace_back(static_cast<std::size_t>(path_.num_edges()));
    }
    for (int e = used.first; e <= used.last; ++e) {
        class_rounds[r][static_cast<std::size_t>(e - 1)] += flow.flow.sigma;
    }
    const int round = static_cast<int>(r) + 1;
    num_rounds_ = std::max(num_rounds_, round);
    return round;
}

Schedule proc_smalls(const PathInstance& path, std::span<const AnnotatedFlow> flows) {
    std::vector<const AnnotatedFlow*> order;
    order.reserve(flows.size());
    for (const auto& f : flows) {
        order.push_back(&f);
    }
    std::stable_sort(order.begin(), order.end(), [](const AnnotatedFlow* a, const AnnotatedFlow* b) {
        return a->flow.sigma > b->flow.sigma;
    });
    SmallFlowScheduler scheduler(path);
    Schedule schedule;
    for (const auto* f : order) {
        schedule.assign(f->id(), scheduler.insert(*f));
    }
    return schedule;
}

} // namespace rufpp
