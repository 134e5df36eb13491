#pragma once

// Everything needed to query one text: the text itself, FM-indexes of the
// text and of its reverse, and (built on first use) the suffix arrays and
// fingerprint tables the match-pointer finders need.
//
// Raw byte patterns are split at foreign bytes, each piece is searched
// separately and MEM starts are reported in raw-pattern coordinates. Byte
// 0x00 is reserved as a record separator: it may appear in texts but never
// takes part in a match.

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "memlight/fm_index.hpp"
#include "memlight/lce.hpp"
#include "memlight/mem_finders.hpp"
#include "memlight/suffix_array.hpp"

namespace memlight {

inline constexpr char kRecordSeparator = '\0';
inline constexpr std::uint64_t kDefaultFingerprintSeed = 0x9E3779B97F4A7C15ULL;

enum class Backend { lce, fm };

struct QueryOptions {
    std::size_t min_length = 1;
    Backend backend = Backend::fm;
    LceMode lce_mode = LceMode::fingerprint;
    std::uint64_t seed = kDefaultFingerprintSeed;
    // Use the full forward-backward walk instead of the thresholded one.
    bool all_mems = false;
    bool locate = false;
};

class TextIndex {
public:
    explicit TextIndex(Text text, std::size_t sample_rate = kDefaultSampleRate);
    // Text is recovered from the forward index; throws IndexFormatError if
    // `rev` does not index the reverse of the same text.
    TextIndex(FmIndex fwd, FmIndex rev);

    const Text& text() const { return text_; }
    const FmIndex& forward() const { return fwd_; }
    const FmIndex& reverse() const { return rev_; }

    const SuffixArray& suffix_array() const;
    const SuffixArray& reversed_suffix_array() const;
    std::shared_ptr<const TextFingerprints> fingerprints(std::uint64_t seed) const;

    // MEMs of the raw pattern with length >= opts.min_length. Every record
    // carries the reverse-index interval of its string (width = occurrence
    // count); occurrences are attached when opts.locate is set.
    FinderResult find_mems(std::string_view raw_pattern, const QueryOptions& opts) const;

    // At most one record: a longest MEM, leftmost among ties.
    FinderResult longest_common_substring(std::string_view raw_pattern, bool locate = false) const;

    // Writes <prefix>.fwd.mli and <prefix>.rev.mli.
    void save(const std::filesystem::path& prefix) const;
    static TextIndex load(const std::filesystem::path& prefix);

    static std::filesystem::path forward_path(const std::filesystem::path& prefix);
    static std::filesystem::path reverse_path(const std::filesystem::path& prefix);

private:
    std::vector<Subpattern> split(std::string_view raw) const;
    void annotate(MemRecord& rec, std::span<const Symbol> piece, bool locate) const;

    Text text_;
    FmIndex fwd_;
    FmIndex rev_;

    mutable std::once_flag sa_once_;
    mutable std::unique_ptr<SuffixArray> sa_;
    mutable std::once_flag rsa_once_;
    mutable std::unique_ptr<SuffixArray> rsa_;
    mutable std::mutex fp_mutex_;
    mutable std::map<std::uint64_t, std::shared_ptr<const TextFingerprints>> fingerprints_;
};

}  // namespace memlight
