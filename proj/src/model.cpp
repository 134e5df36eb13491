#include "memlight/model.hpp"

#include <algorithm>

namespace memlight {

Alphabet::Alphabet() { codes_.fill(-1); }

Alphabet Alphabet::from_bytes(std::span<const std::uint8_t> bytes) {
    std::array<bool, 256> seen{};
    for (std::uint8_t b : bytes) seen[b] = true;
    Alphabet a;
    for (int b = 0; b < 256; ++b) {
        if (!seen[b]) continue;
        a.codes_[b] = static_cast<std::int16_t>(a.symbols_.size());
        a.symbols_.push_back(static_cast<std::uint8_t>(b));
    }
    return a;
}

Symbol Alphabet::encode(std::uint8_t byte) const {
    if (codes_[byte] < 0) {
        throw InputError("byte " + std::to_string(byte) + " is not in the alphabet");
    }
    return static_cast<Symbol>(codes_[byte]);
}

std::vector<Symbol> Alphabet::encode(std::string_view bytes) const {
    std::vector<Symbol> out;
    out.reserve(bytes.size());
    for (char ch : bytes) out.push_back(encode(static_cast<std::uint8_t>(ch)));
    return out;
}

std::string Alphabet::decode(std::span<const Symbol> codes) const {
    std::string out;
    out.reserve(codes.size());
    for (Symbol c : codes) out.push_back(static_cast<char>(decode(c)));
    return out;
}

Alphabet build_alphabet(std::string_view text_bytes) {
    if (text_bytes.empty()) throw InputError("empty text");
    const auto* p = reinterpret_cast<const std::uint8_t*>(text_bytes.data());
    return Alphabet::from_bytes({p, text_bytes.size()});
}

Text make_text(std::string_view bytes) {
    Alphabet alphabet = build_alphabet(bytes);
    return Text::encode(bytes, alphabet);
}

std::vector<Subpattern> split_by_foreign_chars(std::string_view raw_pattern,
                                               const Alphabet& alphabet,
                                               std::string_view extra_foreign) {
    auto foreign = [&](char ch) {
        return !alphabet.contains(static_cast<std::uint8_t>(ch)) ||
               extra_foreign.find(ch) != std::string_view::npos;
    };

    std::vector<Subpattern> out;
    std::size_t i = 0;
    while (i < raw_pattern.size()) {
        if (foreign(raw_pattern[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < raw_pattern.size() && !foreign(raw_pattern[j])) ++j;
        out.push_back({i, Pattern::encode(raw_pattern.substr(i, j - i), alphabet)});
        i = j;
    }
    return out;
}

}  // namespace memlight
