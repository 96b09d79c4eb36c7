#pragma once

#include "rufpp/io.hpp"

#include <cstdint>
#include <string_view>

namespace rufpp {

enum class CapacityProfile {
    Uniform,    // every edge = high
    RandomWalk, // doubling/halving steps clamped to [low, high]
    Bimodal,    // each edge low or high, both present when m >= 2
    Geometric,  // powers of two between low and high, both extremes present when m >= 2
};

std::string_view to_string(CapacityProfile profile);
CapacityProfile parse_capacity_profile(std::string_view name);

/*
 * Random instance recipe. Sizes are drawn relative to each flow's
 * bottleneck b: small in (0, b/4), mid in [b/4, alpha*b], large in (alpha*b, b].
 */
struct GenSpec {
    int m = 8;
    int n = 20;
    CapacityProfile profile = CapacityProfile::RandomWalk;
    Rational low = 1;
    Rational high = 16;
    double frac_small = 1.0 / 3;
    double frac_mid = 1.0 / 3;
    double frac_large = 1.0 / 3;
    Rational alpha = Rational(1, 2);
    /// Longest flow in edges; 0 means the whole path.
    int max_span = 0;
    std::uint64_t seed = 1;
};

/// Throws ParameterError on inconsistent specs (fractions not summing to 1, low > high, ...).
Instance generate(const GenSpec& spec);

} // namespace rufpp
