#include "memlight/fm_index.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include <zlib.h>

namespace memlight {

namespace {

constexpr char kMagic[8] = {'M', 'E', 'M', 'L', 'I', 'D', 'X', '1'};

unsigned levels_for(std::size_t sigma) {
    return std::max(1U, static_cast<unsigned>(std::bit_width(sigma > 0 ? sigma - 1 : 0)));
}

class ByteWriter {
public:
    void u8(std::uint8_t v) { buf_.push_back(static_cast<char>(v)); }
    void u64(std::uint64_t v) {
        for (int k = 0; k < 8; ++k) buf_.push_back(static_cast<char>((v >> (8 * k)) & 0xFF));
    }
    void u32(std::uint32_t v) {
        for (int k = 0; k < 4; ++k) buf_.push_back(static_cast<char>((v >> (8 * k)) & 0xFF));
    }
    void bytes(const void* p, std::size_t len) { buf_.append(static_cast<const char*>(p), len); }
    void words(std::span<const std::uint64_t> ws) {
        for (auto w : ws) u64(w);
    }
    std::string& buffer() { return buf_; }

private:
    std::string buf_;
};

class ByteReader {
public:
    explicit ByteReader(std::string_view data) : data_(data) {}

    std::uint8_t u8() {
        need(1);
        return static_cast<std::uint8_t>(data_[pos_++]);
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int k = 0; k < 8; ++k) v |= std::uint64_t{static_cast<std::uint8_t>(data_[pos_++])} << (8 * k);
        return v;
    }
    std::string_view bytes(std::size_t len) {
        need(len);
        auto s = data_.substr(pos_, len);
        pos_ += len;
        return s;
    }
    std::vector<std::uint64_t> words(std::size_t count) {
        if (count > remaining() / 8) throw IndexFormatError("truncated index file");
        std::vector<std::uint64_t> ws(count);
        for (auto& w : ws) w = u64();
        return ws;
    }
    std::size_t remaining() const { return data_.size() - pos_; }

private:
    void need(std::size_t len) const {
        if (len > remaining()) throw IndexFormatError("truncated index file");
    }

    std::string_view data_;
    std::size_t pos_ = 0;
};

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

FmIndex FmIndex::build(const Text& text, std::size_t sample_rate) {
    const SuffixArray sa = build_suffix_structures(text);
    return build(text, sa, sample_rate);
}

FmIndex FmIndex::build(const Text& text, const SuffixArray& sa, std::size_t sample_rate) {
    if (text.empty()) throw InputError("empty text");
    if (sample_rate == 0) throw InputError("sample rate must be at least 1");
    if (sa.text_size() != text.size()) throw InputError("suffix array does not match the text");

    FmIndex idx;
    idx.n_ = text.size();
    idx.sample_rate_ = sample_rate;
    idx.alphabet_ = text.alphabet();

    const auto t = text.data();
    const auto rows = sa.sa();
    std::vector<Symbol> bwt(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r] == 0) {
            idx.sentinel_row_ = r;
            bwt[r] = 0;
        } else {
            bwt[r] = t[rows[r] - 1];
        }
    }

    idx.counts_.assign(idx.sigma() + 1, 0);
    for (Symbol c : t) ++idx.counts_[c + 1];
    idx.counts_[0] = 1;
    for (std::size_t c = 1; c <= idx.sigma(); ++c) idx.counts_[c] += idx.counts_[c - 1];

    idx.bwt_ = WaveletMatrix(bwt, levels_for(idx.sigma()));

    idx.sampled_rows_ = RankBitVector(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r] % sample_rate == 0) {
            idx.sampled_rows_.set(r);
            idx.samples_.push_back(rows[r]);
        }
    }
    idx.sampled_rows_.build_rank();
    return idx;
}

BwtInterval FmIndex::backward_extend(const BwtInterval& iv, Symbol c, QueryStats* stats) const {
    if (stats) ++stats->backward_steps;
    if (c >= sigma() || iv.empty()) return {0, 0, iv.depth + 1};
    auto rank = [&](std::size_t i) {
        std::size_t r = bwt_.rank(c, i);
        // The sentinel row is stored as code 0.
        if (c == 0 && i > sentinel_row_) --r;
        return r;
    };
    return {counts_[c] + rank(iv.lo), counts_[c] + rank(iv.hi), iv.depth + 1};
}

bool FmIndex::bwt_symbol(std::size_t row, Symbol& out) const {
    if (row == sentinel_row_) return false;
    out = bwt_.access(row);
    return true;
}

std::size_t FmIndex::lf(std::size_t row) const {
    const Symbol c = bwt_.access(row);
    std::size_t r = bwt_.rank(c, row);
    if (c == 0 && row > sentinel_row_) --r;
    return counts_[c] + r;
}

std::string FmIndex::bwt_string(char sentinel) const {
    std::string out(n_ + 1, sentinel);
    for (std::size_t r = 0; r <= n_; ++r) {
        Symbol c;
        if (bwt_symbol(r, c)) out[r] = static_cast<char>(alphabet_.decode(c));
    }
    return out;
}

std::vector<std::size_t> FmIndex::locate_all(const BwtInterval& iv) const {
    std::vector<std::size_t> out;
    if (iv.empty()) return out;
    out.reserve(iv.width());
    for (std::size_t r = iv.lo; r < iv.hi; ++r) {
        if (r == 0) continue;  // sentinel suffix
        std::size_t row = r;
        std::size_t steps = 0;
        while (!sampled_rows_[row]) {
            row = lf(row);
            ++steps;
        }
        out.push_back(samples_[sampled_rows_.rank1(row)] + steps);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Text FmIndex::invert() const {
    std::vector<Symbol> t(n_);
    std::size_t row = 0;  // suffix n
    for (std::size_t k = n_; k > 0; --k) {
        t[k - 1] = bwt_.access(row);
        row = lf(row);
    }
    return Text(std::move(t), alphabet_);
}

bool operator==(const FmIndex& a, const FmIndex& b) {
    return a.n_ == b.n_ && a.sample_rate_ == b.sample_rate_ && a.alphabet_ == b.alphabet_ &&
           a.sentinel_row_ == b.sentinel_row_ && a.counts_ == b.counts_ && a.bwt_ == b.bwt_ &&
           a.sampled_rows_ == b.sampled_rows_ && a.samples_ == b.samples_;
}

// Layout, all integers little-endian:
//   "MEMLIDX1" | u64 n | u64 sigma | u64 sample_rate | sigma alphabet bytes
//   | u64 sentinel_row | u8 width | packed BWT ((n+1) * width bits in u64 words)
//   | u64 counts[sigma+1] | u64 levels | per level: u64 zeros, u64 words[]
//   | u64 marked-row words[] | u64 sample count | u64 samples[] | u32 crc32
void FmIndex::save(std::ostream& out) const {
    ByteWriter w;
    w.bytes(kMagic, sizeof kMagic);
    w.u64(n_);
    w.u64(sigma());
    w.u64(sample_rate_);
    w.bytes(alphabet_.symbols().data(), sigma());
    w.u64(sentinel_row_);

    const unsigned width = bwt_.levels();
    w.u8(static_cast<std::uint8_t>(width));
    std::vector<std::uint64_t> packed(words_for((n_ + 1) * width), 0);
    for (std::size_t r = 0; r <= n_; ++r) {
        const std::uint64_t v = bwt_.access(r);
        for (unsigned b = 0; b < width; ++b) {
            if ((v >> b) & 1U) {
                const std::size_t bit = r * width + b;
                packed[bit / 64] |= std::uint64_t{1} << (bit % 64);
            }
        }
    }
    w.words(packed);

    for (auto c : counts_) w.u64(c);
    w.u64(bwt_.levels());
    for (unsigned l = 0; l < bwt_.levels(); ++l) {
        w.u64(bwt_.zeros(l));
        w.words(bwt_.level(l).words());
    }

    w.words(sampled_rows_.words());
    w.u64(samples_.size());
    for (auto s : samples_) w.u64(s);

    auto& buf = w.buffer();
    const auto crc = crc32(0L, reinterpret_cast<const Bytef*>(buf.data()), static_cast<uInt>(buf.size()));
    w.u32(static_cast<std::uint32_t>(crc));
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw Error("failed to write index");
}

void FmIndex::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    save(out);
}

FmIndex FmIndex::load(std::istream& in) {
    const std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (data.size() < sizeof kMagic || std::memcmp(data.data(), kMagic, sizeof kMagic) != 0) {
        throw IndexFormatError("not a memlight index");
    }
    if (data.size() < sizeof kMagic + 4) throw IndexFormatError("truncated index file");

    const std::size_t body = data.size() - 4;
    std::uint32_t stored = 0;
    for (int k = 0; k < 4; ++k) stored |= std::uint32_t{static_cast<std::uint8_t>(data[body + k])} << (8 * k);
    const auto crc = crc32(0L, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(body));
    if (static_cast<std::uint32_t>(crc) != stored) {
        throw IndexFormatError("index checksum mismatch (file corrupt or truncated)");
    }

    ByteReader r(std::string_view(data).substr(0, body));
    r.bytes(sizeof kMagic);
    FmIndex idx;
    idx.n_ = r.u64();
    const std::uint64_t sigma = r.u64();
    idx.sample_rate_ = r.u64();
    if (idx.n_ == 0 || sigma == 0 || sigma > 256 || idx.sample_rate_ == 0) {
        throw IndexFormatError("invalid index header");
    }
    if (idx.n_ > r.remaining()) throw IndexFormatError("truncated index file");
    const auto alpha = r.bytes(sigma);
    idx.alphabet_ = Alphabet::from_bytes(
        {reinterpret_cast<const std::uint8_t*>(alpha.data()), alpha.size()});
    if (idx.alphabet_.size() != sigma ||
        !std::equal(alpha.begin(), alpha.end(), idx.alphabet_.symbols().begin(),
                    [](char a, std::uint8_t b) { return static_cast<std::uint8_t>(a) == b; })) {
        throw IndexFormatError("invalid alphabet in index");
    }
    idx.sentinel_row_ = r.u64();
    if (idx.sentinel_row_ > idx.n_) throw IndexFormatError("invalid sentinel row");

    const unsigned width = r.u8();
    if (width != levels_for(sigma)) throw IndexFormatError("invalid BWT width");
    const auto packed = r.words(words_for((idx.n_ + 1) * width));

    idx.counts_.resize(sigma + 1);
    for (auto& c : idx.counts_) c = r.u64();
    const std::uint64_t levels = r.u64();
    if (levels != width) throw IndexFormatError("invalid rank structure");
    std::vector<RankBitVector> bvs;
    std::vector<std::size_t> zeros;
    for (unsigned l = 0; l < levels; ++l) {
        zeros.push_back(r.u64());
        bvs.emplace_back(r.words(words_for(idx.n_ + 1)), idx.n_ + 1);
    }
    idx.bwt_ = WaveletMatrix(std::move(bvs), std::move(zeros));

    idx.sampled_rows_ = RankBitVector(r.words(words_for(idx.n_ + 1)), idx.n_ + 1);
    const std::uint64_t count = r.u64();
    if (count != idx.sampled_rows_.rank1(idx.n_ + 1)) throw IndexFormatError("invalid sample count");
    idx.samples_.resize(count);
    for (auto& s : idx.samples_) s = static_cast<Index>(r.u64());
    if (r.remaining() != 0) throw IndexFormatError("trailing bytes in index file");

    // The packed BWT and the wavelet matrix must agree.
    for (std::size_t row = 0; row <= idx.n_; ++row) {
        unsigned v = 0;
        for (unsigned b = 0; b < width; ++b) {
            const std::size_t bit = row * width + b;
            v |= static_cast<unsigned>((packed[bit / 64] >> (bit % 64)) & 1U) << b;
        }
        if (v != idx.bwt_.access(row) || v >= sigma) throw IndexFormatError("inconsistent BWT in index");
    }
    return idx;
}

FmIndex FmIndex::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open index " + path.string());
    return load(in);
}

SearchResult backward_search_prefix(const FmIndex& index, std::span<const Symbol> q,
                                    std::size_t len, QueryStats* stats) {
    SearchResult res{0, index.full()};
    for (std::size_t k = len; k > 0; --k) {
        const BwtInterval next = index.backward_extend(res.interval, q[k - 1], stats);
        if (next.empty()) break;
        res.interval = next;
        ++res.matched;
    }
    return res;
}

}  // namespace memlight
