#pragma once

// Worked examples with hand-checked answers.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

// Small example: pattern against text, with the match pointers (1-based).
inline const std::string kSmallPattern = "TACATAGATTAG";
inline const std::string kSmallText = "GATTAGATACAT";
inline const std::vector<std::size_t> kSmallMf1 = {8, 9, 10, 7, 4, 5, 1, 2, 3, 4, 5, 1};
inline const std::vector<std::size_t> kSmallMb1 = {3, 5, 10, 11, 12, 9, 6, 7, 8, 4, 5, 6};
// Every MEM as (1-based start, 1-based inclusive end).
inline const std::vector<std::pair<std::size_t, std::size_t>> kSmallMems1 = {
    {1, 5}, {4, 6}, {5, 9}, {7, 12}};

// A pattern that is the only MEM of itself in a text built from its prefixes.
inline const std::string kPrefixPattern = "GATTACAT";
inline const std::string kPrefixText = "GCGAAGATAGATTCGATTAGGATTACCGATTACAAGATTACAT";
inline const std::vector<std::size_t> kPrefixMb1 = {1, 4, 8, 13, 19, 26, 34, 43};

// A 550-symbol random DNA text and a 50-symbol pattern with two long MEMs.
inline const std::string kDnaText =
    "TCTTAGCTGACGTTCGGGGCGGGTTAGGCCATCTTCTATAGATTTCTCAG"
    "AGACATCCTAGCCGTGCTGAAGTTGTCACTCGCGGCCGTGTTTCCTAACG"
    "CCACCTGATAGCGTGTTCCAAGCACTTGAGTGTCGGGCTGTAGGGGCTCA"
    "CTCTGCGCAGGATCACGGCTGTTTGTACCTATATCGTTATCGTACTGAAT"
    "AAGTAGAATATCCAAACTTTCAGATTCCGGTTTGGCTGCCAAAACTAGGT"
    "GGGATGTGATGCGCGGCGAATTGTGATCTCGCATTGTATATTATCAATCT"
    "CAGCTTAGCTTGACTTGCACAAAATGAACCCTACGGCGGTGGAGGATTAC"
    "GACCGGAAGCGTCCTGCCTCGGAAAGCGTCCTCCTCAGAAGACGCGCGTG"
    "AGGTCCGTCTTGTGGTCGCGACACAATACGCGACACGAACGACTGGTACC"
    "GGATCAAGTTCTCGATAGGCTGAATTGGCTCTTGTATACATGATGATTGT"
    "GGAATCTATACTGTGAACTTATAGGCAAATCCTATGCCACTACATTACGG";
inline const std::string kDnaPattern = "AAGTCTTATACCCAAACTTACGGATTCCGGTTTGTCTGCCGAAATTAGGT";
// MEM lengths in order of start position.
inline const std::vector<std::size_t> kDnaMemLengths = {4, 5, 5, 6, 5, 4, 4, 8, 6, 6, 5, 5, 12,
                                                        6, 5, 4, 5, 5, 4, 4, 4, 4, 4, 4, 5, 5};

}  // namespace fixtures
