#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "memlight/lce.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace memlight;

namespace {

std::size_t comparison_bound(std::size_t answer) {
    return 2 * static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(answer) + 2))) + 2;
}

}  // namespace

TEST(Fingerprint, BaseIsInRangeAndDeterministic) {
    for (std::uint64_t seed : {0ull, 1ull, 42ull, 0xFFFFFFFFFFFFFFFFull}) {
        const auto b = draw_fingerprint_base(seed);
        EXPECT_GE(b, 2u);
        EXPECT_LE(b, kMersenne61 - 2);
        EXPECT_EQ(b, draw_fingerprint_base(seed));
    }
    EXPECT_NE(draw_fingerprint_base(1), draw_fingerprint_base(2));
}

TEST(Fingerprint, EqualSubstringsHashEqually) {
    const Text t = make_text("ABRACADABRA");
    const TextFingerprints fp(t, 9);
    EXPECT_EQ(fp.text.forward(0, 4, fp.powers), fp.text.forward(7, 4, fp.powers));
    EXPECT_NE(fp.text.forward(0, 4, fp.powers), fp.text.forward(1, 4, fp.powers));
}

TEST(Lce, HandExamples) {
    const Text t = make_text("GATTAGATACAT");
    const Pattern p = Pattern::encode("TACATAGATTAG", t.alphabet());
    for (const auto& lce : {LceBackend::naive(p, t), LceBackend::fingerprint(p, t, 1)}) {
        EXPECT_EQ(lce.lce_forward(6, 0), 6u);   // GATTAG
        EXPECT_EQ(lce.lce_forward(0, 7), 5u);   // TACAT
        EXPECT_EQ(lce.lce_backward(4, 11), 5u); // TACAT ends at both
        EXPECT_EQ(lce.lce_backward(11, 5), 6u);
        EXPECT_EQ(lce.lce_forward(0, 0), 0u);
        EXPECT_THROW(lce.lce_forward(12, 0), InputError);
        EXPECT_THROW(lce.lce_backward(0, 12), InputError);
    }
}

TEST(Lce, FingerprintMatchesNaiveWithinComparisonBound) {
    std::mt19937_64 rng(2024);
    std::size_t queries = 0;
    for (std::size_t sigma : {2, 4}) {
        for (int rep = 0; rep < 10; ++rep) {
            const std::string s = oracle::random_string(rng, 500 + rng() % 2000, oracle::alphabet_of(sigma));
            const Text t = make_text(s);
            // Half the pattern repeats text, so long answers occur.
            std::string ps = s.substr(0, s.size() / 2) + oracle::random_string(rng, 300, t.alphabet().decode(t.data()));
            const Pattern p = Pattern::encode(ps, t.alphabet());
            const auto fast = LceBackend::fingerprint(p, t, rng());
            const auto slow = LceBackend::naive(p, t);
            for (int q = 0; q < 1000; ++q, ++queries) {
                const std::size_t i = rng() % p.size(), j = rng() % t.size();
                QueryStats st;
                const std::size_t f = fast.lce_forward(i, j, &st);
                ASSERT_EQ(f, slow.lce_forward(i, j));
                ASSERT_EQ(f, oracle::lcp(ps, i, s, j));
                ASSERT_LE(st.hash_comparisons, comparison_bound(f));
                QueryStats sb;
                const std::size_t b = fast.lce_backward(i, j, &sb);
                ASSERT_EQ(b, slow.lce_backward(i, j));
                ASSERT_EQ(b, oracle::lcs(ps, i, s, j));
                ASSERT_LE(sb.hash_comparisons, comparison_bound(b));
            }
        }
    }
    EXPECT_EQ(queries, 20000u);
}

TEST(Lce, LongAnswersUseLogarithmicComparisons) {
    const std::string s(5000, 'A');
    const Text t = make_text(s + "C");
    const Pattern p = Pattern::encode(s, t.alphabet());
    const auto lce = LceBackend::fingerprint(p, t, 5);
    QueryStats st;
    EXPECT_EQ(lce.lce_forward(0, 0, &st), 5000u);
    EXPECT_LE(st.hash_comparisons, comparison_bound(5000));
}
