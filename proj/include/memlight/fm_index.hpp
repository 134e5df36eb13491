#pragma once

// FM-index over a linear text: BWT with a wavelet-matrix rank structure,
// cumulative symbol counts and a sampled suffix array for locating.
//
// Every call to backward_extend counts as one backward step, including the
// call that empties the interval.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "memlight/bitvector.hpp"
#include "memlight/model.hpp"
#include "memlight/suffix_array.hpp"

namespace memlight {

inline constexpr std::size_t kDefaultSampleRate = 32;

class FmIndex {
public:
    FmIndex() = default;

    // build_fm. Throws InputError on an empty text or a zero sample rate.
    static FmIndex build(const Text& text, std::size_t sample_rate = kDefaultSampleRate);
    static FmIndex build(const Text& text, const SuffixArray& sa,
                         std::size_t sample_rate = kDefaultSampleRate);

    std::size_t text_size() const { return n_; }
    std::size_t sigma() const { return alphabet_.size(); }
    std::size_t sample_rate() const { return sample_rate_; }
    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t sentinel_row() const { return sentinel_row_; }

    // Interval of the empty string: all n + 1 rows.
    BwtInterval full() const { return {0, n_ + 1, 0}; }

    // Interval of c·X given the interval of X. Symbols outside the alphabet
    // give an empty interval.
    BwtInterval backward_extend(const BwtInterval& iv, Symbol c, QueryStats* stats = nullptr) const;

    // Row of the suffix one position to the left; undefined on the sentinel row.
    std::size_t lf(std::size_t row) const;

    // Symbol in BWT row `row`; false for the sentinel row.
    bool bwt_symbol(std::size_t row, Symbol& out) const;

    // The BWT decoded to bytes, with `sentinel` marking the sentinel row.
    std::string bwt_string(char sentinel = '$') const;

    // Sorted text positions of the rows in iv; the sentinel row is skipped.
    std::vector<std::size_t> locate_all(const BwtInterval& iv) const;

    // Recovers the indexed text by LF-walking from the sentinel suffix.
    Text invert() const;

    void save(std::ostream& out) const;
    void save(const std::filesystem::path& path) const;
    // Throws IndexFormatError on bad magic, truncation or checksum mismatch.
    static FmIndex load(std::istream& in);
    // As above; InputError if the file cannot be opened.
    static FmIndex load(const std::filesystem::path& path);

    friend bool operator==(const FmIndex& a, const FmIndex& b);

private:
    std::size_t n_ = 0;
    std::size_t sample_rate_ = kDefaultSampleRate;
    Alphabet alphabet_;
    std::size_t sentinel_row_ = 0;
    std::vector<std::size_t> counts_;  // counts_[c] = 1 + #symbols < c
    WaveletMatrix bwt_;                // sentinel row stored as code 0
    RankBitVector sampled_rows_;
    std::vector<Index> samples_;       // SA values of marked rows, in row order
};

struct SearchResult {
    std::size_t matched = 0;
    BwtInterval interval;
};

// Backward search of q[0, len): extends by q[len-1], q[len-2], ... and stops
// before the interval would become empty. `matched` is the length of the
// longest suffix of q[0, len) occurring in the text and `interval` is its range.
SearchResult backward_search_prefix(const FmIndex& index, std::span<const Symbol> q,
                                    std::size_t len, QueryStats* stats = nullptr);

}  // namespace memlight
