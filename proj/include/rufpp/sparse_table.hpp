#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace rufpp {

/*
 * Static range-argmin over a vector. O(n log n) build, O(1) query.
 * Ties resolve to the leftmost position.
 */
template <typename T>
class SparseTable {
public:
    SparseTable() = default;

    explicit SparseTable(std::vector<T> values) : values_(std::move(values)) {
        const std::size_t n = values_.size();
        if (n == 0) {
            return;
        }
        // table_[k][i] = argmin over [i, i + 2^k)
        table_.emplace_back(n);
        for (std::size_t i = 0; i < n; ++i) {
            table_[0][i] = i;
        }
        for (std::size_t width = 2; width <= n; width *= 2) {
            const auto& prev = table_.back();
            std::vector<std::size_t> curr(n - width + 1);
            const std::size_t half = width / 2;
            for (std::size_t i = 0; i < curr.size(); ++i) {
                curr[i] = pick(prev[i], prev[i + half]);
            }
            table_.push_back(std::move(curr));
        }
    }

    /// argmin over the inclusive range [first, last]
    std::size_t range_arg_min(std::size_t first, std::size_t last) const {
        assert(first <= last && last < values_.size());
        const std::size_t width = last - first + 1;
        const auto level = static_cast<std::size_t>(std::bit_width(width) - 1);
        const std::size_t block = std::size_t{1} << level;
        return pick(table_[level][first], table_[level][last + 1 - block]);
    }

private:
    std::size_t pick(std::size_t a, std::size_t b) const {
        if (values_[a] < values_[b]) {
            return a;
        }
        if (values_[b] < values_[a]) {
            return b;
        }
        return a < b ? a : b;
    }

    std::vector<T> values_;
    std::vector<std::vector<std::size_t>> table_;
};

} // namespace rufpp
