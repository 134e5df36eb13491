#include "memlight/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "memlight/text_index.hpp"

namespace memlight {

namespace {

constexpr std::string_view kSymbolTable =
    "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

bool bernoulli(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

const char* mutation_name(Mutation m) { return m == Mutation::flip ? "flip" : "replace_uniform"; }

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

void validate(const ExperimentSpec& spec) {
    if (spec.m < 1 || spec.m > spec.n) throw InputError("pattern length must satisfy 1 <= m <= n");
    if (!(spec.rate >= 0.0 && spec.rate <= 1.0)) throw InputError("mutation rate must lie in [0, 1]");
    if (spec.sigma < 1 || spec.sigma > kSymbolTable.size()) {
        throw InputError("alphabet size must lie in [1, 62]");
    }
    if (spec.min_length < 1) throw InputError("minimum MEM length must be at least 1");
    if (spec.sample_rate < 1) throw InputError("sample rate must be at least 1");
}

char experiment_symbol(std::size_t sigma, std::size_t code) {
    if (sigma == 2) return "01"[code];
    if (sigma == 4) return "ACGT"[code];
    return kSymbolTable[code];
}

Instance generate_instance(const ExperimentSpec& spec) {
    validate(spec);
    std::mt19937_64 rng(spec.seed);
    std::vector<std::size_t> codes(spec.n);
    for (auto& c : codes) c = uniform_below(rng, spec.sigma);

    Instance inst;
    inst.text.resize(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) inst.text[i] = experiment_symbol(spec.sigma, codes[i]);

    inst.pattern.resize(spec.m);
    for (std::size_t i = 0; i < spec.m; ++i) {
        std::size_t c = codes[i];
        if (bernoulli(rng, spec.rate)) {
            if (spec.mutation == Mutation::flip) {
                if (spec.sigma > 1) c = (c + 1 + uniform_below(rng, spec.sigma - 1)) % spec.sigma;
            } else {
                c = uniform_below(rng, spec.sigma);
            }
        }
        if (c != codes[i]) ++inst.mutations;
        inst.pattern[i] = experiment_symbol(spec.sigma, c);
    }
    return inst;
}

std::string make_cyclic_text(std::string_view text, std::size_t window) {
    if (window < 1 || window > text.size()) throw InputError("cyclic window must satisfy 1 <= w <= n");
    std::string out(text);
    out.append(text.substr(0, window));
    return out;
}

Text make_cyclic_text(const Text& text, std::size_t window) {
    if (window < 1 || window > text.size()) throw InputError("cyclic window must satisfy 1 <= w <= n");
    std::vector<Symbol> codes(text.data().begin(), text.data().end());
    codes.insert(codes.end(), text.data().begin(), text.data().begin() + static_cast<std::ptrdiff_t>(window));
    return Text(std::move(codes), text.alphabet());
}

std::vector<std::size_t> reduce_cyclic_positions(std::vector<std::size_t> positions, std::size_t n) {
    for (auto& p : positions) p %= n;
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    return positions;
}

std::vector<LengthHistogramRow> classify_mems(const std::vector<MemRecord>& mems) {
    std::map<std::size_t, LengthHistogramRow> rows;
    for (const auto& rec : mems) {
        if (!rec.occurrences) throw InputError("MEM record without occurrences");
        auto& row = rows[rec.length];
        row.length = rec.length;
        ++row.count;
        if (rec.occurrences->size() == 1) {
            ++row.unique;
            if ((*rec.occurrences)[0] == rec.start) ++row.correct;
        }
    }
    std::vector<LengthHistogramRow> out;
    for (auto& [len, row] : rows) out.push_back(row);
    return out;
}

std::vector<LengthHistogramRow> classify_mems(const std::vector<MemRecord>& mems,
                                              const Pattern& pattern, const Text& text,
                                              const SuffixArray& sa_text) {
    std::vector<MemRecord> filled = mems;
    for (auto& rec : filled) {
        if (!rec.occurrences) {
            rec.occurrences = count_occurrences(pattern.data().subspan(rec.start, rec.length), text, sa_text);
        }
    }
    return classify_mems(filled);
}

double ComparisonReport::step_ratio() const {
    return full.backward_steps == 0 ? 0.0
                                    : static_cast<double>(thresholded.backward_steps) /
                                          static_cast<double>(full.backward_steps);
}

std::string ComparisonReport::to_tsv() const {
    std::ostringstream out;
    out << "# memlight experiment report\n"
        << "# tool_version\t" << kToolVersion << '\n'
        << "# prng\t" << kPrngName << '\n'
        << "# seed\t" << spec.seed << '\n'
        << "# n\t" << spec.n << '\n'
        << "# m\t" << spec.m << '\n'
        << "# sigma\t" << spec.sigma << '\n'
        << "# mutation\t" << mutation_name(spec.mutation) << '\n'
        << "# rate\t" << format_double(spec.rate) << '\n'
        << "# L\t" << spec.min_length << '\n'
        << "# cyclic\t" << (spec.cyclic ? 1 : 0) << '\n'
        << "# window\t" << window << '\n'
        << "# sample_rate\t" << spec.sample_rate << '\n'
        << "length\tcount\tunique\tcorrect\n";
    for (const auto& row : histogram) {
        out << row.length << '\t' << row.count << '\t' << row.unique << '\t' << row.correct << '\n';
    }
    out << "# summary\n"
        << "mutations\t" << mutations << '\n'
        << "mems_all\t" << all_mems.size() << '\n'
        << "mems_thresholded\t" << long_mems.size() << '\n'
        << "steps_all\t" << full.backward_steps << '\n'
        << "steps_thresholded\t" << thresholded.backward_steps << '\n'
        << "steps_lcs\t" << lcs.backward_steps << '\n'
        << "iterations_all\t" << full.loop_iterations << '\n'
        << "iterations_thresholded\t" << thresholded.loop_iterations << '\n'
        << "iterations_lcs\t" << lcs.loop_iterations << '\n'
        << "step_ratio\t" << format_double(step_ratio()) << '\n';
    if (longest) {
        out << "lcs_start\t" << longest->start << '\n' << "lcs_length\t" << longest->length << '\n';
    } else {
        out << "lcs_start\t-\nlcs_length\t0\n";
    }
    out << "cross_check\tok\n";
    return out.str();
}

ComparisonReport run_comparison(const ExperimentSpec& spec) {
    validate(spec);
    const Instance inst = generate_instance(spec);

    ComparisonReport rep;
    rep.spec = spec;
    rep.mutations = inst.mutations;
    rep.window = spec.cyclic ? std::min(spec.m + 200, spec.n) : 0;
    const std::string indexed = spec.cyclic ? make_cyclic_text(inst.text, rep.window) : inst.text;
    const TextIndex index(make_text(indexed), spec.sample_rate);

    QueryOptions all;
    all.all_mems = true;
    all.locate = true;
    FinderResult full = index.find_mems(inst.pattern, all);

    QueryOptions thresholded;
    thresholded.min_length = spec.min_length;
    FinderResult longer = index.find_mems(inst.pattern, thresholded);

    FinderResult lcs = index.longest_common_substring(inst.pattern);

    const auto expected = filter_by_length(full.mems, spec.min_length);
    const bool same = std::equal(expected.begin(), expected.end(), longer.mems.begin(),
                                 longer.mems.end(), same_span);
    if (!same) throw Error("thresholded MEMs differ from the filtered full output");

    if (spec.cyclic) {
        for (auto& rec : full.mems) rec.occurrences = reduce_cyclic_positions(*rec.occurrences, spec.n);
    }
    rep.histogram = classify_mems(full.mems);
    rep.full = full.stats;
    rep.thresholded = longer.stats;
    rep.lcs = lcs.stats;
    rep.all_mems = std::move(full.mems);
    rep.long_mems = std::move(longer.mems);
    if (!lcs.mems.empty()) rep.longest = lcs.mems[0];
    return rep;
}

}  // namespace memlight
