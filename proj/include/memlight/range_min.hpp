#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace memlight {

// Range-extremum over a static array: a sparse table on 64-element block
// extrema plus linear scans inside the two boundary blocks. Space is
// O(n / 64 * log n) on top of the referenced data, which the caller keeps alive.
template <class T, class Better = std::less<T>>
class RangeExtremum {
public:
    static constexpr std::size_t kBlock = 64;

    RangeExtremum() = default;

    explicit RangeExtremum(std::span<const T> data) : data_(data) {
        const std::size_t blocks = (data.size() + kBlock - 1) / kBlock;
        if (blocks == 0) return;
        table_.emplace_back(blocks);
        for (std::size_t b = 0; b < blocks; ++b) {
            auto first = data.begin() + b * kBlock;
            auto last = data.begin() + std::min(data.size(), (b + 1) * kBlock);
            table_[0][b] = *std::min_element(first, last, Better{});
        }
        for (std::size_t k = 1; (std::size_t{1} << k) <= blocks; ++k) {
            const std::size_t half = std::size_t{1} << (k - 1);
            std::vector<T> level(blocks - (std::size_t{1} << k) + 1);
            for (std::size_t b = 0; b < level.size(); ++b) {
                level[b] = pick(table_[k - 1][b], table_[k - 1][b + half]);
            }
            table_.push_back(std::move(level));
        }
    }

    // Extremum over data[lo, hi); requires lo < hi.
    T query(std::size_t lo, std::size_t hi) const {
        const std::size_t bl = lo / kBlock;
        const std::size_t br = (hi - 1) / kBlock;
        if (bl == br) return scan(lo, hi);
        T best = pick(scan(lo, (bl + 1) * kBlock), scan(br * kBlock, hi));
        if (bl + 1 < br) {
            const std::size_t count = br - bl - 1;
            const std::size_t k = std::bit_width(count) - 1;
            best = pick(best, pick(table_[k][bl + 1], table_[k][br - (std::size_t{1} << k)]));
        }
        return best;
    }

private:
    static T pick(const T& a, const T& b) { return Better{}(b, a) ? b : a; }

    T scan(std::size_t lo, std::size_t hi) const {
        return *std::min_element(data_.begin() + lo, data_.begin() + hi, Better{});
    }

    std::span<const T> data_;
    std::vector<std::vector<T>> table_;
};

}  // namespace memlight
