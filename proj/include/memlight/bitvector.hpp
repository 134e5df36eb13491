#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace memlight {

// Static bit vector with constant-time rank. One 64-bit cumulative count per
// 512-bit superblock.
class RankBitVector {
public:
    RankBitVector() = default;
    explicit RankBitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}
    RankBitVector(std::vector<std::uint64_t> words, std::size_t size)
        : size_(size), words_(std::move(words)) {
        words_.resize((size + 63) / 64, 0);
        build_rank();
    }

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool operator[](std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    std::size_t size() const { return size_; }
    std::span<const std::uint64_t> words() const { return words_; }

    // Must be called after the last set().
    void build_rank() {
        supers_.assign(words_.size() / 8 + 1, 0);
        std::uint64_t total = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (w % 8 == 0) supers_[w / 8] = total;
            total += std::popcount(words_[w]);
        }
        if (words_.size() % 8 == 0) supers_[words_.size() / 8] = total;
    }

    // Ones in [0, i).
    std::size_t rank1(std::size_t i) const {
        const std::size_t w = i / 64;
        std::size_t r = supers_[w / 8];
        for (std::size_t k = w - w % 8; k < w; ++k) r += std::popcount(words_[k]);
        if (i % 64 != 0) r += std::popcount(words_[w] & ((std::uint64_t{1} << (i % 64)) - 1));
        return r;
    }
    std::size_t rank0(std::size_t i) const { return i - rank1(i); }

    friend bool operator==(const RankBitVector& a, const RankBitVector& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint64_t> supers_;
};

// Wavelet matrix over small integer symbols: access and rank in O(log sigma).
class WaveletMatrix {
public:
    WaveletMatrix() = default;

    WaveletMatrix(std::span<const std::uint8_t> values, unsigned levels) {
        std::vector<std::uint8_t> cur(values.begin(), values.end());
        std::vector<std::uint8_t> next(cur.size());
        for (unsigned l = 0; l < levels; ++l) {
            const unsigned bit = levels - 1 - l;
            RankBitVector bv(cur.size());
            std::size_t zeros = 0;
            for (std::size_t i = 0; i < cur.size(); ++i) {
                if ((cur[i] >> bit) & 1U) bv.set(i); else ++zeros;
            }
            bv.build_rank();
            std::size_t z = 0, o = zeros;
            for (std::uint8_t v : cur) {
                if ((v >> bit) & 1U) next[o++] = v; else next[z++] = v;
            }
            cur.swap(next);
            levels_.push_back(std::move(bv));
            zeros_.push_back(zeros);
        }
    }

    // Reassembles a matrix from serialized levels.
    WaveletMatrix(std::vector<RankBitVector> levels, std::vector<std::size_t> zeros)
        : levels_(std::move(levels)), zeros_(std::move(zeros)) {}

    std::size_t size() const { return levels_.empty() ? 0 : levels_[0].size(); }
    unsigned levels() const { return static_cast<unsigned>(levels_.size()); }
    const RankBitVector& level(unsigned l) const { return levels_[l]; }
    std::size_t zeros(unsigned l) const { return zeros_[l]; }

    std::uint8_t access(std::size_t i) const {
        unsigned v = 0;
        for (unsigned l = 0; l < levels_.size(); ++l) {
            const auto& bv = levels_[l];
            const bool b = bv[i];
            v = (v << 1) | static_cast<unsigned>(b);
            i = b ? zeros_[l] + bv.rank1(i) : bv.rank0(i);
        }
        return static_cast<std::uint8_t>(v);
    }

    // Occurrences of `value` in [0, i).
    std::size_t rank(std::uint8_t value, std::size_t i) const {
        std::size_t s = 0;
        const auto depth = static_cast<unsigned>(levels_.size());
        for (unsigned l = 0; l < depth; ++l) {
            const auto& bv = levels_[l];
            if ((value >> (depth - 1 - l)) & 1U) {
                s = zeros_[l] + bv.rank1(s);
                i = zeros_[l] + bv.rank1(i);
            } else {
                s = bv.rank0(s);
                i = bv.rank0(i);
            }
        }
        return i - s;
    }

    friend bool operator==(const WaveletMatrix&, const WaveletMatrix&) = default;

private:
    std::vector<RankBitVector> levels_;
    std::vector<std::size_t> zeros_;
};

}  // namespace memlight
