#include "memlight/lce.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace memlight {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t reduce(u128 x) {
    // x < 2^122, so one fold leaves r <= 2q.
    std::uint64_t lo = static_cast<std::uint64_t>(x & kMersenne61);
    std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
    std::uint64_t r = lo + hi;
    if (r >= kMersenne61) r -= kMersenne61;
    if (r >= kMersenne61) r -= kMersenne61;
    return r;
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return reduce(static_cast<u128>(a) * b); }

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = a + b;
    return r >= kMersenne61 ? r - kMersenne61 : r;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kMersenne61 - b; }

// Symbols hash as code + 1 so that runs of code 0 are not all-zero.
void prefix_hashes(std::span<const Symbol> seq, std::uint64_t base, bool reverse,
                   std::vector<std::uint64_t>& out) {
    const std::size_t n = seq.size();
    out.assign(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k) {
        const Symbol c = reverse ? seq[n - 1 - k] : seq[k];
        out[k + 1] = add(mul(out[k], base), std::uint64_t{c} + 1);
    }
}

std::uint64_t window(const std::vector<std::uint64_t>& h, std::size_t pos, std::size_t len,
                     std::span<const std::uint64_t> powers) {
    return sub(h[pos + len], mul(h[pos], powers[len]));
}

}  // namespace

std::uint64_t draw_fingerprint_base(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (;;) {
        const std::uint64_t x = rng() >> 3;
        if (x >= 2 && x <= kMersenne61 - 2) return x;
    }
}

PrefixFingerprints::PrefixFingerprints(std::span<const Symbol> seq, std::uint64_t base) {
    prefix_hashes(seq, base, false, fwd_);
    prefix_hashes(seq, base, true, rev_);
}

std::uint64_t PrefixFingerprints::forward(std::size_t pos, std::size_t len,
                                          std::span<const std::uint64_t> powers) const {
    return window(fwd_, pos, len, powers);
}

std::uint64_t PrefixFingerprints::backward(std::size_t pos, std::size_t len,
                                           std::span<const std::uint64_t> powers) const {
    return window(rev_, pos, len, powers);
}

TextFingerprints::TextFingerprints(const Text& t, std::uint64_t seed)
    : base(draw_fingerprint_base(seed)), text(t.data(), base) {
    powers.resize(t.size() + 1);
    powers[0] = 1;
    for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = mul(powers[k - 1], base);
}

LceBackend LceBackend::naive(const Pattern& pattern, const Text& text) {
    return LceBackend(LceMode::naive, pattern.data(), text.data());
}

LceBackend LceBackend::fingerprint(const Pattern& pattern, const Text& text, std::uint64_t seed) {
    return fingerprint(pattern, text, std::make_shared<const TextFingerprints>(text, seed));
}

LceBackend LceBackend::fingerprint(const Pattern& pattern, const Text& text,
                                   std::shared_ptr<const TextFingerprints> table) {
    if (!table || table->text.size() != text.size()) {
        throw InputError("fingerprint table does not match the text");
    }
    LceBackend b(LceMode::fingerprint, pattern.data(), text.data());
    b.pattern_ = PrefixFingerprints(pattern.data(), table->base);
    b.table_ = std::move(table);
    return b;
}

std::size_t LceBackend::lce_forward(std::size_t i, std::size_t j, QueryStats* stats) const {
    if (i >= p_.size() || j >= t_.size()) throw InputError("LCE position out of range");
    return extend<false>(i, j, stats);
}

std::size_t LceBackend::lce_backward(std::size_t i, std::size_t j, QueryStats* stats) const {
    if (i >= p_.size() || j >= t_.size()) throw InputError("LCE position out of range");
    return extend<true>(p_.size() - 1 - i, t_.size() - 1 - j, stats);
}

// Positions are in reversed coordinates when Backward is set.
template <bool Backward>
std::size_t LceBackend::extend(std::size_t i, std::size_t j, QueryStats* stats) const {
    const std::size_t m = p_.size();
    const std::size_t n = t_.size();
    const std::size_t limit = std::min(m - i, n - j);

    auto p_at = [&](std::size_t k) { return Backward ? p_[m - 1 - k] : p_[k]; };
    auto t_at = [&](std::size_t k) { return Backward ? t_[n - 1 - k] : t_[k]; };

    if (mode_ == LceMode::naive) {
        std::size_t len = 0;
        while (len < limit && p_at(i + len) == t_at(j + len)) ++len;
        return len;
    }

    const auto powers = std::span<const std::uint64_t>(table_->powers);
    auto equal = [&](std::size_t len) {
        if (stats) ++stats->hash_comparisons;
        const bool eq = Backward
            ? pattern_.backward(i, len, powers) == table_->text.backward(j, len, powers)
            : pattern_.forward(i, len, powers) == table_->text.forward(j, len, powers);
        // Equal prefixes of length len imply equal first symbols.
        assert(!eq || p_at(i) == t_at(j));
        return eq;
    };

    if (limit == 0) return 0;
    std::size_t good = 0;  // longest length known equal
    std::size_t bad = 0;   // shortest length known unequal
    for (std::size_t probe = 1;; probe *= 2) {
        const std::size_t len = std::min(probe, limit);
        if (!equal(len)) {
            bad = len;
            break;
        }
        good = len;
        if (len == limit) return limit;
    }
    while (bad - good > 1) {
        const std::size_t mid = good + (bad - good) / 2;
        if (equal(mid)) good = mid; else bad = mid;
    }
    return good;
}

}  // namespace memlight
