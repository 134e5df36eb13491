#include "memlight/text_index.hpp"

#include <algorithm>

namespace memlight {

TextIndex::TextIndex(Text text, std::size_t sample_rate) : text_(std::move(text)) {
    if (text_.empty()) throw InputError("empty text");
    sa_ = std::make_unique<SuffixArray>(build_suffix_structures(text_));
    fwd_ = FmIndex::build(text_, *sa_, sample_rate);
    const Text rtext = reversed(text_);
    rsa_ = std::make_unique<SuffixArray>(build_suffix_structures(rtext));
    rev_ = FmIndex::build(rtext, *rsa_, sample_rate);
}

TextIndex::TextIndex(FmIndex fwd, FmIndex rev) : fwd_(std::move(fwd)), rev_(std::move(rev)) {
    if (!(fwd_.alphabet() == rev_.alphabet()) || fwd_.text_size() != rev_.text_size()) {
        throw IndexFormatError("forward and reverse indexes do not belong together");
    }
    text_ = fwd_.invert();
    if (!(reversed(rev_.invert()) == text_)) {
        throw IndexFormatError("forward and reverse indexes do not belong together");
    }
}

const SuffixArray& TextIndex::suffix_array() const {
    std::call_once(sa_once_, [&] {
        if (!sa_) sa_ = std::make_unique<SuffixArray>(build_suffix_structures(text_));
    });
    return *sa_;
}

const SuffixArray& TextIndex::reversed_suffix_array() const {
    std::call_once(rsa_once_, [&] {
        if (!rsa_) rsa_ = std::make_unique<SuffixArray>(build_suffix_structures(reversed(text_)));
    });
    return *rsa_;
}

std::shared_ptr<const TextFingerprints> TextIndex::fingerprints(std::uint64_t seed) const {
    std::lock_guard lock(fp_mutex_);
    auto& slot = fingerprints_[seed];
    if (!slot) slot = std::make_shared<const TextFingerprints>(text_, seed);
    return slot;
}

std::vector<Subpattern> TextIndex::split(std::string_view raw) const {
    return split_by_foreign_chars(raw, text_.alphabet(), std::string_view(&kRecordSeparator, 1));
}

void TextIndex::annotate(MemRecord& rec, std::span<const Symbol> piece, bool locate) const {
    const auto mem = piece.subspan(rec.start, rec.length);
    if (!rec.bwt_interval) {
        const std::vector<Symbol> rmem(mem.rbegin(), mem.rend());
        rec.bwt_interval = backward_search_prefix(rev_, rmem, rmem.size()).interval;
    }
    if (locate && !rec.occurrences) {
        auto pos = rev_.locate_all(*rec.bwt_interval);
        for (auto& q : pos) q = text_.size() - q - rec.length;
        std::sort(pos.begin(), pos.end());
        rec.occurrences = std::move(pos);
    }
}

FinderResult TextIndex::find_mems(std::string_view raw_pattern, const QueryOptions& opts) const {
    if (opts.min_length == 0) throw InputError("minimum MEM length must be at least 1");
    FinderResult total;
    for (const auto& [offset, piece] : split(raw_pattern)) {
        FinderResult part;
        if (opts.backend == Backend::fm) {
            const FmOptions fo{true, opts.locate};
            part = opts.all_mems ? find_all_mems_fm(piece, fwd_, rev_, fo)
                                 : find_long_mems_fm(piece, fwd_, rev_, opts.min_length, fo);
        } else {
            const MatchPointers mp =
                compute_match_pointers(piece, text_, suffix_array(), reversed_suffix_array());
            const LceBackend lce = opts.lce_mode == LceMode::naive
                ? LceBackend::naive(piece, text_)
                : LceBackend::fingerprint(piece, text_, fingerprints(opts.seed));
            part = opts.all_mems ? find_all_mems(piece, mp, lce)
                                 : find_long_mems_lce(piece, mp, lce, opts.min_length);
        }
        total.stats += part.stats;
        for (auto& rec : part.mems) {
            if (rec.length < opts.min_length) continue;
            annotate(rec, piece.data(), opts.locate);
            rec.start += offset;
            total.mems.push_back(std::move(rec));
        }
    }
    return total;
}

FinderResult TextIndex::longest_common_substring(std::string_view raw_pattern, bool locate) const {
    FinderResult total;
    for (const auto& [offset, piece] : split(raw_pattern)) {
        FinderResult part = memlight::longest_common_substring(piece, fwd_, rev_, {true, locate});
        total.stats += part.stats;
        if (part.mems.empty()) continue;
        if (total.mems.empty() || part.mems[0].length > total.mems[0].length) {
            part.mems[0].start += offset;
            total.mems.assign(1, std::move(part.mems[0]));
        }
    }
    return total;
}

std::filesystem::path TextIndex::forward_path(const std::filesystem::path& prefix) {
    return std::filesystem::path(prefix.string() + ".fwd.mli");
}

std::filesystem::path TextIndex::reverse_path(const std::filesystem::path& prefix) {
    return std::filesystem::path(prefix.string() + ".rev.mli");
}

void TextIndex::save(const std::filesystem::path& prefix) const {
    fwd_.save(forward_path(prefix));
    rev_.save(reverse_path(prefix));
}

TextIndex TextIndex::load(const std::filesystem::path& prefix) {
    return TextIndex(FmIndex::load(forward_path(prefix)), FmIndex::load(reverse_path(prefix)));
}

}  // namespace memlight
