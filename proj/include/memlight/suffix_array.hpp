#pragma once

// Plain suffix-array toolkit: construction, match pointers and the
// brute-force MEM oracle every other component is checked against.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "memlight/model.hpp"
#include "memlight/range_min.hpp"

namespace memlight {

using Index = std::uint32_t;

// Suffix array of a text followed by a sentinel smaller than every symbol.
// Row 0 always holds the sentinel suffix (position n).
class SuffixArray {
public:
    SuffixArray() = default;
    explicit SuffixArray(std::span<const Symbol> text, std::size_t sigma);

    SuffixArray(const SuffixArray&) = delete;
    SuffixArray& operator=(const SuffixArray&) = delete;
    SuffixArray(SuffixArray&&) noexcept = default;
    SuffixArray& operator=(SuffixArray&&) noexcept = default;

    std::size_t text_size() const { return sa_.size() - 1; }
    std::span<const Index> sa() const { return sa_; }
    std::span<const Index> isa() const { return isa_; }
    // lcp[k] = LCP of the suffixes in rows k-1 and k; lcp[0] = 0.
    std::span<const Index> lcp() const { return lcp_; }

    Index min_lcp(std::size_t lo, std::size_t hi) const { return lcp_min_->query(lo, hi); }
    Index min_position(std::size_t lo, std::size_t hi) const { return pos_min_->query(lo, hi); }
    Index max_position(std::size_t lo, std::size_t hi) const { return pos_max_->query(lo, hi); }

private:
    std::vector<Index> sa_;
    std::vector<Index> isa_;
    std::vector<Index> lcp_;
    // Heap-allocated so the spans they hold stay valid across moves.
    std::unique_ptr<RangeExtremum<Index>> lcp_min_;
    std::unique_ptr<RangeExtremum<Index>> pos_min_;
    std::unique_ptr<RangeExtremum<Index, std::greater<Index>>> pos_max_;
};

// SA-IS over `text` plus sentinel; returns n + 1 entries with result[0] = n.
std::vector<Index> build_suffix_array(std::span<const Symbol> text, std::size_t sigma);

// Kasai et al. LCP over a suffix array produced by build_suffix_array.
std::vector<Index> build_lcp_array(std::span<const Symbol> text, std::span<const Index> sa,
                                   std::span<const Index> isa);

SuffixArray build_suffix_structures(const Text& text);

// The reverse of a text, over the same alphabet.
Text reversed(const Text& text);
Pattern reversed(const Pattern& pattern);

// Forward-match (mf) and backward-match (mb) pointers: mf[i] starts a
// suffix of T sharing the longest prefix with P[i..), mb[i] ends a prefix of
// T sharing the longest suffix with P[..i]. Ties go to the smallest position.
struct MatchPointers {
    std::vector<Index> mf;
    std::vector<Index> mb;
};

// `sa_text` indexes T and `sa_reversed` indexes reversed(T). Throws
// InputError if P is empty or holds a symbol absent from T.
MatchPointers compute_match_pointers(const Pattern& pattern, const Text& text,
                                     const SuffixArray& sa_text,
                                     const SuffixArray& sa_reversed);

// Every MEM of length >= min_length, by computing the longest match starting
// at each pattern position and keeping the left-maximal ones. Occurrences
// are attached in ascending order.
std::vector<MemRecord> brute_force_mems(const Pattern& pattern, const Text& text,
                                        const SuffixArray& sa_text,
                                        std::size_t min_length);

// Sorted start positions of `query` in T. Throws "empty query" on empty input.
std::vector<std::size_t> count_occurrences(std::span<const Symbol> query, const Text& text,
                                           const SuffixArray& sa_text);

}  // namespace memlight
