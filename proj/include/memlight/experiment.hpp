#pragma once

// Random-text experiments comparing backward-step counts of the full
// forward-backward walk, the thresholded walk and the longest-common-
// substring mode, with a per-length MEM classification.
//
// Randomness comes from std::mt19937_64 seeded with ExperimentSpec::seed.
// Draw order: n text symbols, then for each of the first m positions one
// Bernoulli draw and, when it fires, one replacement draw. Symbols are drawn
// by rejection-sampled modulo; a Bernoulli(p) draw compares the top 53 bits
// of one output, scaled to [0, 1), against p.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "memlight/mem_finders.hpp"
#include "memlight/model.hpp"

namespace memlight {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kPrngName = "mt19937_64";

enum class Mutation {
    flip,             // replace with a different symbol (the complement when sigma = 2)
    replace_uniform,  // replace with a uniform symbol, possibly the same one
};

struct ExperimentSpec {
    std::size_t n = 1'000'000;
    std::size_t m = 10'000;
    std::size_t sigma = 2;
    Mutation mutation = Mutation::flip;
    double rate = 0.1;
    std::size_t min_length = 40;
    std::uint64_t seed = 42;
    bool cyclic = true;
    std::size_t sample_rate = 32;
};

// Throws InputError unless 1 <= m <= n, 0 <= rate <= 1, 1 <= sigma <= 62 and
// min_length >= 1.
void validate(const ExperimentSpec& spec);

// The byte used for symbol code k in generated texts: "01" for sigma 2,
// "ACGT" for sigma 4, otherwise 0-9, A-Z, a-z in order.
char experiment_symbol(std::size_t sigma, std::size_t code);

struct Instance {
    std::string text;     // raw bytes, length n
    std::string pattern;  // raw bytes derived from text[0, m)
    std::size_t mutations = 0;  // positions where pattern differs from text
};

Instance generate_instance(const ExperimentSpec& spec);

// T followed by its first `window` symbols (1 <= window <= n).
Text make_cyclic_text(const Text& text, std::size_t window);
std::string make_cyclic_text(std::string_view text, std::size_t window);

// Positions in a doubled text reduced modulo n, sorted and deduplicated.
std::vector<std::size_t> reduce_cyclic_positions(std::vector<std::size_t> positions, std::size_t n);

struct LengthHistogramRow {
    std::size_t length = 0;
    std::size_t count = 0;
    std::size_t unique = 0;   // occurs exactly once in T
    std::size_t correct = 0;  // unique, and that occurrence starts where the MEM starts in P

    friend bool operator==(const LengthHistogramRow&, const LengthHistogramRow&) = default;
};

// One row per distinct length, ascending. Every record must carry its
// occurrences (InputError otherwise). P is assumed aligned with T[0, m).
std::vector<LengthHistogramRow> classify_mems(const std::vector<MemRecord>& mems);

// Same, counting occurrences with the suffix array where a record has none.
std::vector<LengthHistogramRow> classify_mems(const std::vector<MemRecord>& mems,
                                              const Pattern& pattern, const Text& text,
                                              const SuffixArray& sa_text);

struct ComparisonReport {
    ExperimentSpec spec;
    std::size_t window = 0;  // cyclic extension, 0 when linear
    std::size_t mutations = 0;
    QueryStats full;
    QueryStats thresholded;
    QueryStats lcs;
    std::vector<MemRecord> all_mems;
    std::vector<MemRecord> long_mems;
    std::optional<MemRecord> longest;
    std::vector<LengthHistogramRow> histogram;

    double step_ratio() const;
    // Byte-deterministic for a given spec.
    std::string to_tsv() const;
};

// Runs all three walks on one generated instance. Throws Error if the
// thresholded output differs from the filtered full output.
ComparisonReport run_comparison(const ExperimentSpec& spec);

}  // namespace memlight
