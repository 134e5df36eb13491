#pragma once

// Longest-common-extension queries between a pattern and a text.
//
// The fingerprint backend compares Karp-Rabin hashes of prefixes (mod the
// Mersenne prime 2^61 - 1) and answers in O(log answer) comparisons by an
// exponential search followed by a binary search. Answers are correct unless
// two distinct substrings collide, which happens with probability at most
// (m + n) / 2^61 per comparison. The naive backend scans symbol by symbol
// and is exact.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "memlight/model.hpp"

namespace memlight {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

// Polynomial prefix hashes of one sequence and of its reverse.
class PrefixFingerprints {
public:
    PrefixFingerprints() = default;
    PrefixFingerprints(std::span<const Symbol> seq, std::uint64_t base);

    // Hash of seq[pos, pos + len) (forward) or of rev(seq)[pos, pos + len).
    std::uint64_t forward(std::size_t pos, std::size_t len, std::span<const std::uint64_t> powers) const;
    std::uint64_t backward(std::size_t pos, std::size_t len, std::span<const std::uint64_t> powers) const;
    std::size_t size() const { return fwd_.empty() ? 0 : fwd_.size() - 1; }

private:
    std::vector<std::uint64_t> fwd_;
    std::vector<std::uint64_t> rev_;
};

// Text-side fingerprint table, built once and shared by every pattern's backend.
struct TextFingerprints {
    TextFingerprints(const Text& text, std::uint64_t seed);

    std::uint64_t base;
    PrefixFingerprints text;
    std::vector<std::uint64_t> powers;  // base^k mod q, k <= n
};

enum class LceMode { fingerprint, naive };

class LceBackend {
public:
    // Both P and T must outlive the backend.
    static LceBackend naive(const Pattern& pattern, const Text& text);
    static LceBackend fingerprint(const Pattern& pattern, const Text& text, std::uint64_t seed);
    static LceBackend fingerprint(const Pattern& pattern, const Text& text,
                                  std::shared_ptr<const TextFingerprints> table);

    LceMode mode() const { return mode_; }

    // LCP(P[i..), T[j..)). Throws InputError when i >= m or j >= n.
    std::size_t lce_forward(std::size_t i, std::size_t j, QueryStats* stats = nullptr) const;

    // LCS(P[..i], T[..j]) with both ends inclusive.
    std::size_t lce_backward(std::size_t i, std::size_t j, QueryStats* stats = nullptr) const;

private:
    LceBackend(LceMode mode, std::span<const Symbol> p, std::span<const Symbol> t)
        : mode_(mode), p_(p), t_(t) {}

    template <bool Backward>
    std::size_t extend(std::size_t i, std::size_t j, QueryStats* stats) const;

    LceMode mode_;
    std::span<const Symbol> p_;
    std::span<const Symbol> t_;
    std::shared_ptr<const TextFingerprints> table_;
    PrefixFingerprints pattern_;
};

// A base drawn uniformly from [2, q - 2] by a seeded mt19937_64.
std::uint64_t draw_fingerprint_base(std::uint64_t seed);

}  // namespace memlight
