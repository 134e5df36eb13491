#pragma once

// MEM finders.
//
// Two families share one output contract (MEMs sorted by start, lengths >=
// the threshold, starts and ends strictly increasing):
//
//  * match-pointer finders walk the forward-backward recurrence using the MF
//    and MB arrays plus LCP/LCS queries from an LceBackend;
//  * FM finders emulate the same walk with backward searches on an FM-index
//    of T (for LCS-like steps) and of reversed T (for LCP-like steps). They
//    are deterministic, and the interval of each reporting search is an
//    interval of the reverse-text index whose width is the occurrence count.
//
// Pattern positions are 0-based. Both families expect every pattern symbol to
// occur in the text; the FM finders additionally tolerate foreign codes
// (any code >= sigma) in their span overloads.

#include <cstddef>
#include <span>
#include <vector>

#include "memlight/fm_index.hpp"
#include "memlight/lce.hpp"
#include "memlight/model.hpp"
#include "memlight/suffix_array.hpp"

namespace memlight {

struct FinderResult {
    std::vector<MemRecord> mems;
    QueryStats stats;
};

struct FmOptions {
    bool report_intervals = false;
    bool locate = false;  // attach forward-text occurrence positions
};

// Every MEM, one LCP and (except after the last MEM) one LCS query per MEM.
FinderResult find_all_mems(const Pattern& pattern, const MatchPointers& mp, const LceBackend& lce);

// Only MEMs of length >= min_length. Each loop iteration first asks for the
// LCS ending at i + L - 1: if it reaches back to i, the MEM starting at i is
// long and gets reported; otherwise no long MEM starts before the LCS start,
// which becomes the next i.
FinderResult find_long_mems_lce(const Pattern& pattern, const MatchPointers& mp,
                                const LceBackend& lce, std::size_t min_length);

// The same thresholded walk driven purely by backward steps.
FinderResult find_long_mems_fm(std::span<const Symbol> pattern, const FmIndex& fwd,
                               const FmIndex& rev, std::size_t min_length, FmOptions opts = {});
FinderResult find_long_mems_fm(const Pattern& pattern, const FmIndex& fwd, const FmIndex& rev,
                               std::size_t min_length, FmOptions opts = {});

// The full forward-backward walk on FM-indexes; the step-count baseline.
FinderResult find_all_mems_fm(std::span<const Symbol> pattern, const FmIndex& fwd,
                              const FmIndex& rev, FmOptions opts = {});
FinderResult find_all_mems_fm(const Pattern& pattern, const FmIndex& fwd, const FmIndex& rev,
                              FmOptions opts = {});

// A single maximum-length MEM (the leftmost one), found by running the
// thresholded FM walk with the threshold kept at best length + 1.
FinderResult longest_common_substring(std::span<const Symbol> pattern, const FmIndex& fwd,
                                      const FmIndex& rev, FmOptions opts = {});
FinderResult longest_common_substring(const Pattern& pattern, const FmIndex& fwd,
                                      const FmIndex& rev, FmOptions opts = {});

// MEMs of `mems` with length >= min_length, order preserved.
std::vector<MemRecord> filter_by_length(const std::vector<MemRecord>& mems, std::size_t min_length);

}  // namespace memlight
