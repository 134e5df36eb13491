#include "memlight/suffix_array.hpp"

#include <algorithm>
#include <cassert>

namespace memlight {

namespace {

// SA-IS (Nong, Zhang and Chan). `s` ends with a unique 0 and every value
// lies in [0, k).
std::vector<std::int32_t> sais(const std::vector<std::int32_t>& s, std::int32_t k) {
    const auto n = static_cast<std::int32_t>(s.size());
    std::vector<std::int32_t> sa(n, -1);
    if (n == 1) {
        sa[0] = 0;
        return sa;
    }

    std::vector<bool> stype(n);
    stype[n - 1] = true;
    for (std::int32_t i = n - 2; i >= 0; --i) {
        stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
    }
    auto is_lms = [&](std::int32_t i) { return i > 0 && stype[i] && !stype[i - 1]; };

    std::vector<std::int32_t> bucket(k + 1, 0);
    for (std::int32_t c : s) ++bucket[c + 1];
    for (std::int32_t c = 0; c < k; ++c) bucket[c + 1] += bucket[c];

    auto induce = [&](const std::vector<std::int32_t>& lms) {
        std::fill(sa.begin(), sa.end(), -1);
        std::vector<std::int32_t> tail(bucket.begin() + 1, bucket.end());
        for (auto it = lms.rbegin(); it != lms.rend(); ++it) sa[--tail[s[*it]]] = *it;

        std::vector<std::int32_t> head(bucket.begin(), bucket.end() - 1);
        for (std::int32_t r = 0; r < n; ++r) {
            const std::int32_t p = sa[r] - 1;
            if (sa[r] > 0 && !stype[p]) sa[head[s[p]]++] = p;
        }
        tail.assign(bucket.begin() + 1, bucket.end());
        for (std::int32_t r = n - 1; r >= 0; --r) {
            const std::int32_t p = sa[r] - 1;
            if (sa[r] > 0 && stype[p]) sa[--tail[s[p]]] = p;
        }
    };

    std::vector<std::int32_t> lms;
    for (std::int32_t i = 1; i < n; ++i) {
        if (is_lms(i)) lms.push_back(i);
    }
    induce(lms);

    // Name LMS substrings in sorted order.
    std::vector<std::int32_t> name(n, -1);
    std::int32_t names = 0;
    std::int32_t prev = -1;
    for (std::int32_t r = 0; r < n; ++r) {
        const std::int32_t p = sa[r];
        if (!is_lms(p)) continue;
        bool differ = prev < 0;
        for (std::int32_t d = 0; !differ; ++d) {
            if (s[p + d] != s[prev + d] || stype[p + d] != stype[prev + d]) {
                differ = true;
            } else if (d > 0 && (is_lms(p + d) || is_lms(prev + d))) {
                differ = !(is_lms(p + d) && is_lms(prev + d));
                break;
            }
        }
        if (differ) ++names;
        name[p] = names - 1;
        prev = p;
    }

    std::vector<std::int32_t> reduced;
    reduced.reserve(lms.size());
    for (std::int32_t p : lms) reduced.push_back(name[p]);

    std::vector<std::int32_t> reduced_sa;
    if (names < static_cast<std::int32_t>(lms.size())) {
        reduced_sa = sais(reduced, names);
    } else {
        reduced_sa.resize(lms.size());
        for (std::size_t i = 0; i < reduced.size(); ++i) reduced_sa[reduced[i]] = static_cast<std::int32_t>(i);
    }

    std::vector<std::int32_t> sorted_lms;
    sorted_lms.reserve(lms.size());
    for (std::int32_t r : reduced_sa) sorted_lms.push_back(lms[r]);
    induce(sorted_lms);
    return sa;
}

// Symbol at depth d of the suffix in `row`, or -1 past the end of the text.
template <class At>
int symbol_at(const SuffixArray& sa, At&& at, std::size_t n, std::size_t row, std::size_t depth) {
    const std::size_t p = sa.sa()[row] + depth;
    return p < n ? static_cast<int>(at(p)) : -1;
}

// Narrows [lo, hi), whose rows share a prefix of length `depth`, to the rows
// continuing with `c`.
template <class At>
void narrow(const SuffixArray& sa, At&& at, std::size_t n, std::size_t depth, int c,
            std::size_t& lo, std::size_t& hi) {
    std::size_t a = lo, b = hi;
    while (a < b) {
        const std::size_t mid = a + (b - a) / 2;
        if (symbol_at(sa, at, n, mid, depth) < c) a = mid + 1; else b = mid;
    }
    std::size_t first = a;
    b = hi;
    while (a < b) {
        const std::size_t mid = a + (b - a) / 2;
        if (symbol_at(sa, at, n, mid, depth) <= c) a = mid + 1; else b = mid;
    }
    lo = first;
    hi = a;
}

// For every i, a text position whose suffix shares the longest prefix with
// q[i..), picking the smallest (or largest) such position. Uses the ISA and
// LCP array as a suffix link: the interval for q[i+1..i+d) is recovered from
// one row of the interval for q[i..i+d) in O(log n) range queries.
template <class At>
std::vector<Index> forward_pointers(std::span<const Symbol> q, const SuffixArray& sa, At&& at,
                                    bool prefer_largest) {
    const std::size_t n = sa.text_size();
    const std::size_t m = q.size();
    std::vector<Index> out(m);
    std::size_t lo = 0, hi = n + 1, depth = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (i > 0) {
            if (depth <= 1) {
                lo = 0;
                hi = n + 1;
                depth = 0;
            } else {
                const std::size_t row = sa.isa()[sa.sa()[lo] + 1];
                --depth;
                // Smallest l <= row with min(lcp[l+1..row]) >= depth.
                std::size_t a = 0, b = row;
                while (a < b) {
                    const std::size_t mid = a + (b - a) / 2;
                    if (sa.min_lcp(mid + 1, row + 1) >= depth) b = mid; else a = mid + 1;
                }
                lo = a;
                // Largest h >= row with min(lcp[row+1..h]) >= depth.
                a = row;
                b = n;
                while (a < b) {
                    const std::size_t mid = a + (b - a + 1) / 2;
                    if (sa.min_lcp(row + 1, mid + 1) >= depth) a = mid; else b = mid - 1;
                }
                hi = a + 1;
            }
        }
        while (i + depth < m) {
            std::size_t l = lo, h = hi;
            narrow(sa, at, n, depth, q[i + depth], l, h);
            if (l >= h) break;
            lo = l;
            hi = h;
            ++depth;
        }
        if (depth == 0) throw InputError("pattern symbol does not occur in the text; split the pattern first");
        out[i] = prefer_largest ? sa.max_position(lo, hi) : sa.min_position(lo, hi);
    }
    return out;
}

template <class Tag>
Sequence<Tag> reverse_sequence(const Sequence<Tag>& s) {
    std::vector<Symbol> codes(s.data().rbegin(), s.data().rend());
    return Sequence<Tag>(std::move(codes), s.alphabet());
}

// Row range [lo, hi) of suffixes starting with q, by plain binary search.
std::pair<std::size_t, std::size_t> find_rows(std::span<const Symbol> q, const Text& text,
                                              const SuffixArray& sa) {
    const auto t = text.data();
    auto cmp_prefix = [&](std::size_t row) {
        // <0 if suffix < q (as a prefix comparison), 0 if q is a prefix, >0 otherwise.
        const std::size_t p = sa.sa()[row];
        for (std::size_t d = 0; d < q.size(); ++d) {
            if (p + d >= t.size()) return -1;
            if (t[p + d] != q[d]) return t[p + d] < q[d] ? -1 : 1;
        }
        return 0;
    };
    std::size_t a = 0, b = sa.sa().size();
    while (a < b) {
        const std::size_t mid = a + (b - a) / 2;
        if (cmp_prefix(mid) < 0) a = mid + 1; else b = mid;
    }
    const std::size_t lo = a;
    b = sa.sa().size();
    while (a < b) {
        const std::size_t mid = a + (b - a) / 2;
        if (cmp_prefix(mid) <= 0) a = mid + 1; else b = mid;
    }
    return {lo, a};
}

}  // namespace

std::vector<Index> build_suffix_array(std::span<const Symbol> text, std::size_t sigma) {
    std::vector<std::int32_t> s;
    s.reserve(text.size() + 1);
    for (Symbol c : text) s.push_back(static_cast<std::int32_t>(c) + 1);
    s.push_back(0);
    const auto raw = sais(s, static_cast<std::int32_t>(sigma) + 1);
    return {raw.begin(), raw.end()};
}

std::vector<Index> build_lcp_array(std::span<const Symbol> text, std::span<const Index> sa,
                                   std::span<const Index> isa) {
    const std::size_t n = text.size();
    std::vector<Index> lcp(sa.size(), 0);
    std::size_t h = 0;
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t row = isa[p];
        // Row 0 is the sentinel, so every text suffix has a predecessor.
        const std::size_t q = sa[row - 1];
        while (p + h < n && q + h < n && text[p + h] == text[q + h]) ++h;
        lcp[row] = static_cast<Index>(h);
        if (h > 0) --h;
    }
    return lcp;
}

SuffixArray::SuffixArray(std::span<const Symbol> text, std::size_t sigma)
    : sa_(build_suffix_array(text, sigma)) {
    isa_.resize(sa_.size());
    for (std::size_t r = 0; r < sa_.size(); ++r) isa_[sa_[r]] = static_cast<Index>(r);
    lcp_ = build_lcp_array(text, sa_, isa_);
    lcp_min_ = std::make_unique<RangeExtremum<Index>>(std::span<const Index>(lcp_));
    pos_min_ = std::make_unique<RangeExtremum<Index>>(std::span<const Index>(sa_));
    pos_max_ = std::make_unique<RangeExtremum<Index, std::greater<Index>>>(std::span<const Index>(sa_));
}

SuffixArray build_suffix_structures(const Text& text) {
    if (text.empty()) throw InputError("empty text");
    return SuffixArray(text.data(), text.alphabet().size());
}

Text reversed(const Text& text) { return reverse_sequence(text); }
Pattern reversed(const Pattern& pattern) { return reverse_sequence(pattern); }

MatchPointers compute_match_pointers(const Pattern& pattern, const Text& text,
                                     const SuffixArray& sa_text,
                                     const SuffixArray& sa_reversed) {
    if (pattern.empty()) throw InputError("empty pattern");
    const std::size_t n = text.size();
    const std::size_t m = pattern.size();
    const auto t = text.data();

    MatchPointers mp;
    mp.mf = forward_pointers(pattern.data(), sa_text, [&](std::size_t p) { return t[p]; }, false);

    // Backward pointers are forward pointers of the reversed strings; the
    // largest reversed position is the smallest original end position.
    std::vector<Symbol> prev(pattern.data().rbegin(), pattern.data().rend());
    const auto back = forward_pointers(prev, sa_reversed,
                                       [&](std::size_t p) { return t[n - 1 - p]; }, true);
    mp.mb.resize(m);
    for (std::size_t i = 0; i < m; ++i) mp.mb[i] = static_cast<Index>(n - 1 - back[m - 1 - i]);
    return mp;
}

std::vector<MemRecord> brute_force_mems(const Pattern& pattern, const Text& text,
                                        const SuffixArray& sa_text,
                                        std::size_t min_length) {
    const auto p = pattern.data();
    const std::size_t m = p.size();
    for (Symbol c : p) {
        if (count_occurrences(std::span<const Symbol>(&c, 1), text, sa_text).empty()) {
            throw InputError("pattern symbol does not occur in the text; split the pattern first");
        }
    }

    // longest[i]: length of the longest prefix of P[i..) occurring in T.
    // longest[i+1] >= longest[i] - 1, so each search resumes from there.
    std::vector<std::size_t> longest(m, 0);
    std::size_t len = 0;
    for (std::size_t i = 0; i < m; ++i) {
        len = len > 0 ? len - 1 : 0;
        while (i + len < m) {
            auto [lo, hi] = find_rows(p.subspan(i, len + 1), text, sa_text);
            if (lo >= hi) break;
            ++len;
        }
        longest[i] = len;
    }

    std::vector<MemRecord> out;
    for (std::size_t i = 0; i < m; ++i) {
        const bool left_maximal = i == 0 || longest[i - 1] + (i - 1) < longest[i] + i;
        if (!left_maximal || longest[i] < min_length) continue;
        MemRecord rec;
        rec.start = i;
        rec.length = longest[i];
        rec.occurrences = count_occurrences(p.subspan(i, longest[i]), text, sa_text);
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<std::size_t> count_occurrences(std::span<const Symbol> query, const Text& text,
                                           const SuffixArray& sa_text) {
    if (query.empty()) throw InputError("empty query");
    auto [lo, hi] = find_rows(query, text, sa_text);
    std::vector<std::size_t> pos;
    pos.reserve(hi - lo);
    for (std::size_t r = lo; r < hi; ++r) pos.push_back(sa_text.sa()[r]);
    std::sort(pos.begin(), pos.end());
    return pos;
}

}  // namespace memlight
