#include "memlight/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "memlight/experiment.hpp"
#include "memlight/text_index.hpp"

namespace memlight {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_fasta(std::string_view content) {
    const std::string_view t = trim(content);
    return !t.empty() && (t.front() == '>' || t.front() == ';');
}

struct MemsArgs {
    std::string index;
    std::string patterns;
    std::size_t min_length = 1;
    std::string backend = "fm";
    std::string lce_mode = "fingerprint";
    std::uint64_t seed = kDefaultFingerprintSeed;
    bool locate = false;
    bool intervals = false;
    bool all = false;
    bool raw = false;
    unsigned threads = 1;
};

void write_row(std::ostream& out, const std::string& id, const MemRecord& rec, bool intervals,
               bool locate) {
    const std::size_t occ = rec.occurrences ? rec.occurrences->size()
                                            : (rec.bwt_interval ? rec.bwt_interval->width() : 0);
    out << id << '\t' << rec.start + 1 << '\t' << rec.end() << '\t' << rec.length << '\t' << occ;
    if (intervals) {
        out << '\t';
        if (rec.bwt_interval) out << '[' << rec.bwt_interval->lo << ',' << rec.bwt_interval->hi << ')';
    }
    if (locate) {
        out << '\t';
        if (rec.occurrences) {
            for (std::size_t k = 0; k < rec.occurrences->size(); ++k) {
                if (k) out << ',';
                out << (*rec.occurrences)[k] + 1;
            }
        }
    }
    out << '\n';
}

// Runs `work` on every record, possibly on several threads, and writes the
// per-record output in input order.
template <class Work>
void for_each_record(const std::vector<FastaRecord>& records, unsigned threads, std::ostream& out,
                     Work work) {
    std::vector<std::string> chunks(records.size());
    std::vector<std::exception_ptr> errors(records.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < records.size();) {
            try {
                std::ostringstream buf;
                work(records[k], buf);
                chunks[k] = buf.str();
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(records.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (std::size_t k = 0; k < records.size(); ++k) {
        if (errors[k]) std::rethrow_exception(errors[k]);
        out << chunks[k];
    }
}

void cmd_index(const std::string& input, const std::string& output, std::size_t sample_rate,
               bool raw, bool concat, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    const auto records = read_records(input, raw);
    std::string text;
    if (concat) {
        for (std::size_t k = 0; k < records.size(); ++k) {
            if (k) text.push_back(kRecordSeparator);
            text += records[k].sequence;
        }
    } else {
        if (records.size() > 1) {
            err << "note: indexing only the first of " << records.size()
                << " records; use --concat-sep to index all of them\n";
        }
        text = records.front().sequence;
    }
    const TextIndex index(make_text(text), sample_rate);
    index.save(output);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", secs);
    out << "n\t" << index.text().size() << '\n'
        << "sigma\t" << index.text().alphabet().size() << '\n'
        << "records\t" << (concat ? records.size() : 1) << '\n'
        << "build_seconds\t" << buf << '\n'
        << "forward\t" << TextIndex::forward_path(output).string() << '\n'
        << "reverse\t" << TextIndex::reverse_path(output).string() << '\n';
}

QueryOptions query_options(const MemsArgs& a) {
    QueryOptions opts;
    opts.min_length = a.all ? 1 : a.min_length;
    opts.all_mems = a.all;
    opts.backend = a.backend == "lce" ? Backend::lce : Backend::fm;
    opts.lce_mode = a.lce_mode == "naive" ? LceMode::naive : LceMode::fingerprint;
    opts.seed = a.seed;
    opts.locate = a.locate;
    return opts;
}

void cmd_mems(const MemsArgs& a, std::ostream& out) {
    const TextIndex index = TextIndex::load(a.index);
    const auto records = read_records(a.patterns, a.raw);
    const QueryOptions opts = query_options(a);
    for_each_record(records, a.threads, out, [&](const FastaRecord& r, std::ostream& o) {
        for (const auto& rec : index.find_mems(r.sequence, opts).mems) {
            write_row(o, r.id, rec, a.intervals, a.locate);
        }
    });
}

void cmd_lcs(const MemsArgs& a, std::ostream& out) {
    const TextIndex index = TextIndex::load(a.index);
    const auto records = read_records(a.patterns, a.raw);
    for_each_record(records, a.threads, out, [&](const FastaRecord& r, std::ostream& o) {
        const auto res = index.longest_common_substring(r.sequence, a.locate);
        if (res.mems.empty()) return;
        const MemRecord& rec = res.mems.front();
        std::ostringstream row;
        write_row(row, r.id, rec, a.intervals, a.locate);
        std::string line = row.str();
        line.pop_back();
        o << line << '\t' << std::string_view(r.sequence).substr(rec.start, rec.length) << '\n';
    });
}

}  // namespace

std::vector<FastaRecord> parse_fasta(std::string_view content) {
    std::vector<FastaRecord> records;
    std::size_t line_no = 0;
    while (!content.empty()) {
        const std::size_t nl = content.find('\n');
        std::string_view line = content.substr(0, nl);
        content.remove_prefix(nl == std::string_view::npos ? content.size() : nl + 1);
        ++line_no;
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == ';') continue;
        if (t.front() == '>') {
            std::string_view header = trim(t.substr(1));
            const auto end = std::find_if(header.begin(), header.end(), is_space);
            if (end == header.begin()) {
                throw InputError("FASTA header without an id on line " + std::to_string(line_no));
            }
            records.push_back({std::string(header.begin(), end), {}});
            continue;
        }
        if (records.empty()) {
            throw InputError("FASTA sequence data before the first header on line " +
                             std::to_string(line_no));
        }
        for (char c : t) {
            if (!is_space(c)) records.back().sequence.push_back(c);
        }
    }
    for (const auto& r : records) {
        if (r.sequence.empty()) throw InputError("FASTA record '" + r.id + "' has an empty sequence");
    }
    if (records.empty()) throw InputError("empty text");
    return records;
}

std::vector<FastaRecord> read_records(const std::string& path, bool force_raw) {
    const std::string content = read_file(path);
    if (!force_raw && looks_like_fasta(content)) return parse_fasta(content);
    std::string seq = content;
    while (!seq.empty() && (seq.back() == '\n' || seq.back() == '\r')) seq.pop_back();
    if (seq.empty()) throw InputError("empty text");
    std::string id = std::filesystem::path(path).stem().string();
    if (id.empty()) id = "pattern";
    return {{std::move(id), std::move(seq)}};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"memlight: maximal exact matches above a length threshold", "memlight"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::string in_path, out_prefix;
    std::size_t sample_rate = kDefaultSampleRate;
    bool raw = false, concat = false;
    auto* index = app.add_subcommand("index", "Build forward and reverse FM-indexes of a text");
    index->add_option("text", in_path, "Text file (FASTA or raw bytes)")->required();
    index->add_option("-o,--output", out_prefix, "Output prefix for <prefix>.fwd.mli and <prefix>.rev.mli")
        ->required();
    index->add_option("-s,--sample-rate", sample_rate, "Suffix-array sampling rate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    index->add_flag("--raw", raw, "Treat the input as raw bytes, not FASTA");
    index->add_flag("--concat-sep", concat,
                    "Index every FASTA record, joined by a separator byte no match can cross");

    MemsArgs ma;
    auto add_query_options = [&](CLI::App* sub) {
        sub->add_option("index", ma.index, "Index prefix given to `memlight index`")->required();
        sub->add_option("patterns", ma.patterns, "Pattern file (FASTA or raw bytes)")->required();
        sub->add_flag("--raw", ma.raw, "Treat the pattern file as one raw pattern");
        sub->add_flag("--locate", ma.locate, "Append 1-based text positions of every occurrence");
        sub->add_flag("--intervals", ma.intervals, "Append the BWT interval of the reverse-text index");
        sub->add_option("-j,--threads", ma.threads, "Pattern records processed in parallel")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };
    auto* mems = app.add_subcommand("mems", "Report MEMs of length at least L (TSV)");
    add_query_options(mems);
    mems->add_option("-L,--min-mem-length", ma.min_length, "Minimum MEM length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    mems->add_option("--backend", ma.backend, "fm: FM-index walk; lce: match pointers and LCE")
        ->check(CLI::IsMember({"fm", "lce"}))
        ->capture_default_str();
    mems->add_option("--lce", ma.lce_mode, "LCE evaluation for the lce backend")
        ->check(CLI::IsMember({"fingerprint", "naive"}))
        ->capture_default_str();
    mems->add_option("--seed", ma.seed, "Fingerprint seed for the lce backend");
    mems->add_flag("--all", ma.all, "Report every MEM (L = 1) with the full forward-backward walk");

    auto* lcs = app.add_subcommand("lcs", "Report one longest MEM per pattern (TSV)");
    add_query_options(lcs);

    ExperimentSpec spec;
    std::string mutation = "flip", report_path;
    auto* exp = app.add_subcommand("experiment", "Random-text step-count comparison (TSV report)");
    exp->add_option("--n", spec.n, "Text length")->check(CLI::PositiveNumber)->capture_default_str();
    exp->add_option("--m", spec.m, "Pattern length")->check(CLI::PositiveNumber)->capture_default_str();
    exp->add_option("--sigma", spec.sigma, "Alphabet size")->check(CLI::Range(1, 62))->capture_default_str();
    exp->add_option("--mutation", mutation, "flip: always a different symbol; replace: uniform symbol")
        ->check(CLI::IsMember({"flip", "replace"}))
        ->capture_default_str();
    exp->add_option("--rate", spec.rate, "Per-position mutation probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    exp->add_option("-L,--L", spec.min_length, "MEM length threshold")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    exp->add_option("--seed", spec.seed, "PRNG seed")->capture_default_str();
    exp->add_flag("--cyclic,!--no-cyclic", spec.cyclic, "Treat the text as cyclic")->capture_default_str();
    exp->add_option("--sample-rate", spec.sample_rate, "Suffix-array sampling rate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    exp->add_option("-o,--output", report_path, "Write the report here instead of standard output");

    try {
        std::vector<std::string> reversed_args(args.rbegin(), args.rend());
        app.parse(reversed_args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*index) {
            cmd_index(in_path, out_prefix, sample_rate, raw, concat, out, err);
        } else if (*mems) {
            cmd_mems(ma, out);
        } else if (*lcs) {
            cmd_lcs(ma, out);
        } else if (*exp) {
            spec.mutation = mutation == "flip" ? Mutation::flip : Mutation::replace_uniform;
            const std::string report = run_comparison(spec).to_tsv();
            if (report_path.empty()) {
                out << report;
            } else {
                std::ofstream f(report_path, std::ios::binary | std::ios::trunc);
                if (!f || !(f << report)) throw InputError("cannot write " + report_path);
            }
        }
    } catch (const IndexFormatError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace memlight
