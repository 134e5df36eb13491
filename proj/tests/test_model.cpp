#include <gtest/gtest.h>

#include "memlight/model.hpp"

using namespace memlight;

TEST(Alphabet, SortedDistinctBytes) {
    const Alphabet a = build_alphabet("GATTACA");
    ASSERT_EQ(a.size(), 4u);
    EXPECT_EQ(a.decode(0), 'A');
    EXPECT_EQ(a.decode(3), 'T');
    EXPECT_EQ(a.encode('G'), 2);
    EXPECT_TRUE(a.contains('C'));
    EXPECT_FALSE(a.contains('N'));
    EXPECT_THROW(a.encode('N'), InputError);
}

TEST(Alphabet, EmptyTextRejected) {
    EXPECT_THROW(build_alphabet(""), InputError);
    EXPECT_THROW(make_text(""), InputError);
}

TEST(Text, RoundTripsThroughCodes) {
    const Text t = make_text("GATTAGATACAT");
    EXPECT_EQ(t.size(), 12u);
    EXPECT_EQ(t.alphabet().size(), 4u);
    EXPECT_EQ(t.to_string(), "GATTAGATACAT");
}

TEST(Sequence, RejectsOutOfRangeCodes) {
    const Alphabet a = build_alphabet("AC");
    EXPECT_THROW(Pattern({0, 2}, a), InputError);
}

TEST(Split, NoForeignCharactersGivesOnePiece) {
    const Alphabet a = build_alphabet("ACGT");
    const auto parts = split_by_foreign_chars("GATTACA", a);
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].offset, 0u);
    EXPECT_EQ(parts[0].pattern.to_string(), "GATTACA");
}

TEST(Split, ForeignRunsSeparatePiecesAndKeepOffsets) {
    const Alphabet a = build_alphabet("ACGT");
    const auto parts = split_by_foreign_chars("NNGATNNNTACAN", a);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].offset, 2u);
    EXPECT_EQ(parts[0].pattern.to_string(), "GAT");
    EXPECT_EQ(parts[1].offset, 8u);
    EXPECT_EQ(parts[1].pattern.to_string(), "TACA");
}

TEST(Split, AllForeignGivesNothing) {
    const Alphabet a = build_alphabet("ACGT");
    EXPECT_TRUE(split_by_foreign_chars("NNNN", a).empty());
    EXPECT_TRUE(split_by_foreign_chars("", a).empty());
}

TEST(Split, ExtraForeignBytesAlsoSplit) {
    const std::string text("AC\0GT", 5);
    const Alphabet a = build_alphabet(text);
    const std::string raw("AC\0GT", 5);
    const auto parts = split_by_foreign_chars(raw, a, std::string_view("\0", 1));
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[1].offset, 3u);
}

TEST(QueryStats, Accumulates) {
    QueryStats a{1, 2, 3, 4, 5};
    a += QueryStats{10, 20, 30, 40, 50};
    EXPECT_EQ(a.backward_steps, 11u);
    EXPECT_EQ(a.lcp_queries, 22u);
    EXPECT_EQ(a.lcs_queries, 33u);
    EXPECT_EQ(a.loop_iterations, 44u);
    EXPECT_EQ(a.hash_comparisons, 55u);
}
