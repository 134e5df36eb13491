#include "memlight/mem_finders.hpp"

#include <algorithm>

namespace memlight {

namespace {

void require_matching_pointers(const Pattern& pattern, const MatchPointers& mp) {
    if (pattern.empty()) throw InputError("empty pattern");
    if (mp.mf.size() != pattern.size() || mp.mb.size() != pattern.size()) {
        throw InputError("match pointers do not match the pattern; split on foreign characters first");
    }
}

void require_compatible(const FmIndex& fwd, const FmIndex& rev) {
    if (!(fwd.alphabet() == rev.alphabet()) || fwd.text_size() != rev.text_size()) {
        throw InputError("forward and reverse indexes disagree");
    }
}

// The reporting search and its bookkeeping for FM finders. `prev` is the
// reversed pattern.
class FmWalk {
public:
    FmWalk(std::span<const Symbol> p, const FmIndex& fwd, const FmIndex& rev, FmOptions opts,
           QueryStats& stats)
        : p_(p), prev_(p.rbegin(), p.rend()), fwd_(fwd), rev_(rev), opts_(opts), stats_(stats) {
        require_compatible(fwd, rev);
    }

    // Length of the longest suffix of P[0, end) occurring in T.
    std::size_t suffix_match(std::size_t end) {
        return backward_search_prefix(fwd_, p_, end, &stats_).matched;
    }

    // Longest prefix of P[i..) occurring in T, as a record.
    MemRecord prefix_match(std::size_t i) {
        const SearchResult r = backward_search_prefix(rev_, prev_, p_.size() - i, &stats_);
        MemRecord rec;
        rec.start = i;
        rec.length = r.matched;
        if (opts_.report_intervals) rec.bwt_interval = r.interval;
        if (opts_.locate && r.matched > 0) {
            // Rows of the reverse index give starts of the reversed match.
            auto pos = rev_.locate_all(r.interval);
            const std::size_t n = rev_.text_size();
            for (auto& q : pos) q = n - q - r.matched;
            std::sort(pos.begin(), pos.end());
            rec.occurrences = std::move(pos);
        }
        return rec;
    }

private:
    std::span<const Symbol> p_;
    std::vector<Symbol> prev_;
    const FmIndex& fwd_;
    const FmIndex& rev_;
    FmOptions opts_;
    QueryStats& stats_;
};

// The thresholded FM walk. With `adaptive`, the threshold becomes one more
// than each reported length and only the last (longest) report is kept.
FinderResult thresholded_fm(std::span<const Symbol> p, const FmIndex& fwd, const FmIndex& rev,
                            std::size_t min_length, FmOptions opts, bool adaptive) {
    if (min_length == 0) throw InputError("minimum MEM length must be at least 1");
    FinderResult res;
    FmWalk walk(p, fwd, rev, opts, res.stats);
    const std::size_t m = p.size();
    std::size_t len = min_length;
    std::size_t i = 0;
    while (i + len <= m) {
        ++res.stats.loop_iterations;
        std::size_t j = i + len - 1;
        const std::size_t k = j + 1 - walk.suffix_match(j + 1);
        if (k > i) {
            i = k;
            continue;
        }
        MemRecord rec = walk.prefix_match(i);
        j = i + rec.length - 1;
        if (adaptive) {
            len = rec.length + 1;
            res.mems.assign(1, std::move(rec));
        } else {
            res.mems.push_back(std::move(rec));
        }
        if (j + 1 >= m) break;
        i = j + 2 - walk.suffix_match(j + 2);
    }
    return res;
}

}  // namespace

FinderResult find_all_mems(const Pattern& pattern, const MatchPointers& mp, const LceBackend& lce) {
    require_matching_pointers(pattern, mp);
    FinderResult res;
    auto& st = res.stats;
    const std::size_t m = pattern.size();
    std::size_t i = 0;
    for (;;) {
        ++st.loop_iterations;
        ++st.lcp_queries;
        const std::size_t f = lce.lce_forward(i, mp.mf[i], &st);
        res.mems.push_back({i, f, {}, {}});
        const std::size_t next = i + f;
        if (next >= m) break;
        ++st.lcs_queries;
        i = next + 1 - lce.lce_backward(next, mp.mb[next], &st);
    }
    return res;
}

FinderResult find_long_mems_lce(const Pattern& pattern, const MatchPointers& mp,
                                const LceBackend& lce, std::size_t min_length) {
    require_matching_pointers(pattern, mp);
    if (min_length == 0) throw InputError("minimum MEM length must be at least 1");
    FinderResult res;
    auto& st = res.stats;
    const std::size_t m = pattern.size();
    const std::size_t len = min_length;
    std::size_t i = 0;
    while (i + len <= m) {
        ++st.loop_iterations;
        const std::size_t e = i + len - 1;
        ++st.lcs_queries;
        const std::size_t b = lce.lce_backward(e, mp.mb[e], &st);
        if (b < len) {
            i += len - b;
            continue;
        }
        ++st.lcp_queries;
        const std::size_t f = lce.lce_forward(i, mp.mf[i], &st);
        res.mems.push_back({i, f, {}, {}});
        const std::size_t next = i + f;
        if (next >= m) break;
        ++st.lcs_queries;
        i = next + 1 - lce.lce_backward(next, mp.mb[next], &st);
    }
    return res;
}

FinderResult find_long_mems_fm(std::span<const Symbol> pattern, const FmIndex& fwd,
                               const FmIndex& rev, std::size_t min_length, FmOptions opts) {
    return thresholded_fm(pattern, fwd, rev, min_length, opts, false);
}

FinderResult find_long_mems_fm(const Pattern& pattern, const FmIndex& fwd, const FmIndex& rev,
                               std::size_t min_length, FmOptions opts) {
    return find_long_mems_fm(pattern.data(), fwd, rev, min_length, opts);
}

FinderResult find_all_mems_fm(std::span<const Symbol> pattern, const FmIndex& fwd,
                              const FmIndex& rev, FmOptions opts) {
    FinderResult res;
    FmWalk walk(pattern, fwd, rev, opts, res.stats);
    const std::size_t m = pattern.size();
    std::size_t i = 0;
    while (i < m) {
        ++res.stats.loop_iterations;
        MemRecord rec = walk.prefix_match(i);
        const std::size_t next = i + rec.length;
        // A zero-length match means P[i] is foreign; nothing to report.
        if (rec.length > 0) res.mems.push_back(std::move(rec));
        if (next >= m) break;
        i = next + 1 - walk.suffix_match(next + 1);
    }
    return res;
}

FinderResult find_all_mems_fm(const Pattern& pattern, const FmIndex& fwd, const FmIndex& rev,
                              FmOptions opts) {
    return find_all_mems_fm(pattern.data(), fwd, rev, opts);
}

FinderResult longest_common_substring(std::span<const Symbol> pattern, const FmIndex& fwd,
                                      const FmIndex& rev, FmOptions opts) {
    return thresholded_fm(pattern, fwd, rev, 1, opts, true);
}

FinderResult longest_common_substring(const Pattern& pattern, const FmIndex& fwd,
                                      const FmIndex& rev, FmOptions opts) {
    return longest_common_substring(pattern.data(), fwd, rev, opts);
}

std::vector<MemRecord> filter_by_length(const std::vector<MemRecord>& mems, std::size_t min_length) {
    std::vector<MemRecord> out;
    std::copy_if(mems.begin(), mems.end(), std::back_inserter(out),
                 [&](const MemRecord& r) { return r.length >= min_length; });
    return out;
}

}  // namespace memlight
