#pragma once

// Command-line front end: `memlight index|mems|lcs|experiment`.
//
// Input files are FASTA when their first non-blank line starts with '>' or
// ';', raw bytes otherwise (or always with --raw). Output is TSV with
// 1-based inclusive coordinates.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace memlight {

struct FastaRecord {
    std::string id;        // first token after '>'
    std::string sequence;  // line breaks and whitespace removed
};

// Blank lines and ';' comment lines are ignored. Throws InputError on text
// before the first header, an empty id or an empty sequence.
std::vector<FastaRecord> parse_fasta(std::string_view content);

// Reads `path` as FASTA or raw bytes (see above). A raw file becomes a single
// record named after the file stem, with trailing line breaks removed.
std::vector<FastaRecord> read_records(const std::string& path, bool force_raw);

// Runs the tool and returns the process exit code: 0 on success, 2 on usage
// or input errors, 3 on index-format errors, 1 otherwise.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace memlight
