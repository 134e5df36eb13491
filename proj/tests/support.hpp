#pragma once

#include <string>
#include <vector>

#include "memlight/model.hpp"
#include "oracles.hpp"

namespace support {

inline std::vector<oracle::Mem> spans(const std::vector<memlight::MemRecord>& mems) {
    std::vector<oracle::Mem> out;
    out.reserve(mems.size());
    for (const auto& r : mems) out.push_back({r.start, r.length});
    return out;
}

inline memlight::Pattern pattern(const std::string& p, const memlight::Text& t) {
    return memlight::Pattern::encode(p, t.alphabet());
}

}  // namespace support
