#include "rufpp/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace rufpp {

std::string_view to_string(CapacityProfile profile) {
    switch (profile) {
    case CapacityProfile::Uniform:
        return "uniform";
    case CapacityProfile::RandomWalk:
        return "random-walk";
    case CapacityProfile::Bimodal:
        return "bimodal";
    case CapacityProfile::Geometric:
        return "geometric";
    }
    return "?";
}

CapacityProfile parse_capacity_profile(std::string_view name) {
    if (name == "uniform") {
        return CapacityProfile::Uniform;
    }
    if (name == "random-walk") {
        return CapacityProfile::RandomWalk;
    }
    if (name == "bimodal") {
        return CapacityProfile::Bimodal;
    }
    if (name == "geometric") {
        return CapacityProfile::Geometric;
    }
    throw ParameterError("unknown capacity profile '" + std::string(name) + "'");
}

namespace {

// Explicit arithmetic on the raw engine output keeps streams identical
// across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

constexpr std::int64_t kSizeGrid = 1024;

std::vector<Rational> make_capacities(const GenSpec& spec, Rng& rng) {
    const auto m = static_cast<std::size_t>(spec.m);
    std::vector<Rational> caps(m);
    switch (spec.profile) {
    case CapacityProfile::Uniform:
        for (auto& c : caps) {
            c = spec.high;
        }
        break;
    case CapacityProfile::Bimodal:
        for (auto& c : caps) {
            c = rng.between(0, 1) ? spec.high : spec.low;
        }
        if (m >= 2) {
            const auto a = static_cast<std::size_t>(rng.between(0, spec.m - 1));
            auto b = static_cast<std::size_t>(rng.between(0, spec.m - 2));
            b += b >= a ? 1 : 0;
            caps[a] = spec.low;
            caps[b] = spec.high;
        }
        break;
    case CapacityProfile::Geometric: {
        const int levels = floor_log2(Rational(spec.high / spec.low));
        for (auto& c : caps) {
            c = spec.low * pow(Rational(2), static_cast<int>(rng.between(0, levels)));
        }
        if (m >= 2) {
            const auto a = static_cast<std::size_t>(rng.between(0, spec.m - 1));
            auto b = static_cast<std::size_t>(rng.between(0, spec.m - 2));
            b += b >= a ? 1 : 0;
            caps[a] = spec.low;
            caps[b] = spec.low * pow(Rational(2), levels);
        }
        break;
    }
    case CapacityProfile::RandomWalk: {
        const int levels = floor_log2(Rational(spec.high / spec.low));
        int level = static_cast<int>(rng.between(0, levels));
        for (auto& c : caps) {
            c = spec.low * pow(Rational(2), level);
            level = std::clamp(level + static_cast<int>(rng.between(-1, 1)), 0, levels);
        }
        break;
    }
    }
    return caps;
}

} // namespace

Instance generate(const GenSpec& spec) {
    if (spec.m < 1 || spec.n < 0) {
        throw ParameterError("generator needs m >= 1 and n >= 0");
    }
    if (spec.low <= 0 || spec.low > spec.high) {
        throw ParameterError("generator needs 0 < low <= high");
    }
    if (spec.frac_small < 0 || spec.frac_mid < 0 || spec.frac_large < 0 ||
        std::abs(spec.frac_small + spec.frac_mid + spec.frac_large - 1.0) > 1e-9) {
        throw ParameterError("size-mix fractions must be non-negative and sum to 1");
    }
    if (spec.alpha < Rational(1, 4) || spec.alpha >= 1) {
        throw ParameterError("generator alpha must lie in [1/4, 1)");
    }

    Rng rng(spec.seed);
    PathInstance path(make_capacities(spec, rng));

    const std::int64_t mid_top = mpz_class(spec.alpha * kSizeGrid).get_si();
    std::vector<Flow> flows;
    flows.reserve(static_cast<std::size_t>(spec.n));
    const int max_span = spec.max_span > 0 ? spec.max_span : spec.m;
    for (int i = 0; i < spec.n; ++i) {
        Flow f;
        f.id = static_cast<FlowId>(i);
        f.s = static_cast<int>(rng.between(0, spec.m - 1));
        f.t = f.s + static_cast<int>(rng.between(1, std::min(max_span, spec.m - f.s)));
        const Rational b = path.capacity(path.min_edge(edges_used(f)));

        const double u = rng.unit();
        std::int64_t k;
        if (u < spec.frac_small) {
            k = rng.between(1, kSizeGrid / 4 - 1);
        } else if (u < spec.frac_small + spec.frac_mid) {
            k = rng.between(kSizeGrid / 4, mid_top);
        } else {
            k = rng.between(mid_top + 1, kSizeGrid);
        }
        f.sigma = b * Rational(k, kSizeGrid);
        f.sigma.canonicalize();
        flows.push_back(std::move(f));
    }
    return Instance{std::move(path), std::move(flows)};
}

} // namespace rufpp
