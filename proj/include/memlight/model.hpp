#pragma once

// Shared domain types: alphabets, encoded sequences, MEM records and
// per-query counters. Coordinates are 0-based and half-open everywhere
// inside the library; only the CLI prints 1-based inclusive positions.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "memlight/error.hpp"

namespace memlight {

using Symbol = std::uint8_t;

// Dense mapping between the distinct bytes of a text and codes [0, sigma).
// Codes follow ascending byte order.
class Alphabet {
public:
    Alphabet();

    // Builds from an arbitrary list of bytes; duplicates are collapsed.
    static Alphabet from_bytes(std::span<const std::uint8_t> bytes);

    std::size_t size() const { return symbols_.size(); }
    std::span<const std::uint8_t> symbols() const { return symbols_; }

    bool contains(std::uint8_t byte) const { return codes_[byte] >= 0; }

    // Throws InputError on a byte outside the alphabet.
    Symbol encode(std::uint8_t byte) const;
    std::uint8_t decode(Symbol code) const { return symbols_.at(code); }

    std::vector<Symbol> encode(std::string_view bytes) const;
    std::string decode(std::span<const Symbol> codes) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.symbols_ == b.symbols_;
    }

private:
    std::vector<std::uint8_t> symbols_;
    std::array<std::int16_t, 256> codes_;
};

// build_alphabet: the distinct bytes of a non-empty text.
Alphabet build_alphabet(std::string_view text_bytes);

namespace detail {
struct TextTag {};
struct PatternTag {};
}  // namespace detail

// An encoded symbol sequence tied to the alphabet it was encoded with.
// Text and Pattern are distinct instantiations so they cannot be swapped
// by accident at call sites.
template <class Tag>
class Sequence {
public:
    Sequence() = default;
    Sequence(std::vector<Symbol> codes, Alphabet alphabet)
        : data_(std::move(codes)), alphabet_(std::move(alphabet)) {
        for (Symbol c : data_) {
            if (c >= alphabet_.size()) throw InputError("symbol code out of alphabet range");
        }
    }

    // Encodes bytes that must all belong to the alphabet.
    static Sequence encode(std::string_view bytes, const Alphabet& alphabet) {
        return Sequence(alphabet.encode(bytes), alphabet);
    }

    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }
    Symbol operator[](std::size_t i) const { return data_[i]; }
    std::span<const Symbol> data() const { return data_; }
    const Alphabet& alphabet() const { return alphabet_; }
    std::string to_string() const { return alphabet_.decode(data_); }

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    std::vector<Symbol> data_;
    Alphabet alphabet_;
};

using Text = Sequence<detail::TextTag>;
using Pattern = Sequence<detail::PatternTag>;

// A text over exactly its own distinct bytes. Throws "empty text" on empty input.
Text make_text(std::string_view bytes);

struct Subpattern {
    std::size_t offset = 0;  // position of the first symbol in the raw pattern
    Pattern pattern;
};

// Cuts a raw pattern at every byte the alphabet lacks (and at every byte in
// `extra_foreign`). Subpatterns are maximal and non-empty; offsets refer to
// the raw pattern so results can be reported in its coordinates.
std::vector<Subpattern> split_by_foreign_chars(std::string_view raw_pattern,
                                               const Alphabet& alphabet,
                                               std::string_view extra_foreign = {});

// Half-open row range [lo, hi) of suffixes prefixed by a matched string.
struct BwtInterval {
    std::size_t lo = 0;
    std::size_t hi = 0;
    std::size_t depth = 0;

    std::size_t width() const { return hi - lo; }
    bool empty() const { return hi <= lo; }
    friend bool operator==(const BwtInterval&, const BwtInterval&) = default;
};

struct MemRecord {
    std::size_t start = 0;
    std::size_t length = 0;
    std::optional<BwtInterval> bwt_interval;
    std::optional<std::vector<std::size_t>> occurrences;

    std::size_t end() const { return start + length; }
};

// Start/length equality; the optional payloads are ignored.
inline bool same_span(const MemRecord& a, const MemRecord& b) {
    return a.start == b.start && a.length == b.length;
}

struct QueryStats {
    std::uint64_t backward_steps = 0;
    std::uint64_t lcp_queries = 0;
    std::uint64_t lcs_queries = 0;
    std::uint64_t loop_iterations = 0;
    std::uint64_t hash_comparisons = 0;

    QueryStats& operator+=(const QueryStats& o) {
        backward_steps += o.backward_steps;
        lcp_queries += o.lcp_queries;
        lcs_queries += o.lcs_queries;
        loop_iterations += o.loop_iterations;
        hash_comparisons += o.hash_comparisons;
        return *this;
    }
};

}  // namespace memlight
