#include <gtest/gtest.h>

#include <random>

#include "mta/candidate_stream.hpp"
#include "mta/oracle.hpp"
#include "test_support.hpp"

using namespace mta;

namespace {

SymbolMatrix matrix_from(const std::string& symbols, Index s)
{
    SymbolMatrix m;
    m.symbols = symbols;
    m.symbol_length = s;
    m.series_length = static_cast<Index>(symbols.size()) + s - 1;
    return m;
}

std::vector<Index> starts_of(const CandidateMatrix& m)
{
    std::vector<Index> starts;
    for (const auto& w : m.words) starts.push_back(w.start);
    return starts;
}

std::string random_stream(std::mt19937_64& rng, std::size_t length, int alphabet, double repeat_bias)
{
    std::uniform_int_distribution<int> symbol(0, alphabet - 1);
    std::bernoulli_distribution repeat(repeat_bias);
    std::string out;
    for (std::size_t i = 0; i < length; ++i) {
        out.push_back(!out.empty() && repeat(rng) ? out.back() : symbol_for_region(symbol(rng)));
    }
    return out;
}

}  // namespace

TEST(SymbolMatrix, Sizes)
{
    const auto alphabet = make_alphabet(6);
    const auto series = load_series(synth::random_walk(960, 3));
    Params params;
    params.symbol_length = 10;
    EXPECT_EQ(build_symbol_matrix(series, params, alphabet).size(), 950);

    Vector ten = Vector::LinSpaced(10, -1.0, 1.0);
    EXPECT_EQ(build_symbol_matrix(ten, 10, alphabet).size(), 1);
    EXPECT_THROW(build_symbol_matrix(ten, 11, alphabet), Error);
}

TEST(SymbolMatrix, MatchesWindowSymbolization)
{
    const auto alphabet = make_alphabet(6);
    const auto series = load_series(synth::random_walk(400, 5));
    const auto matrix = build_symbol_matrix(series.norm, 7, alphabet);
    for (Index i = 0; i < matrix.size(); ++i) {
        EXPECT_EQ(matrix.symbols[static_cast<std::size_t>(i)], symbolize_window(series.norm, i, 7, alphabet));
    }
}

TEST(SymbolMatrix, SawtoothAlternates)
{
    // Period 2s = 20, v[i] = ((i mod 20) - 9.5) / 5.77. Window [0,10) has mean (4.5 - 9.5)/5.77 = -0.867,
    // window [10,20) has mean +0.867; with a = 4 those fall below -0.674 and above +0.674.
    constexpr Index s = 10;
    Vector norm(200);
    for (Index i = 0; i < norm.size(); ++i) {
        norm[i] = (static_cast<double>(i % 20) - 9.5) / 5.77;
    }
    const auto matrix = build_symbol_matrix(norm, s, make_alphabet(4));
    for (Index k = 0; k * s < matrix.size(); ++k) {
        EXPECT_EQ(matrix.symbols[static_cast<std::size_t>(k * s)], k % 2 == 0 ? 'a' : 'd') << k;
    }
}

TEST(CandidateMatrix, KeepsFirstOfShortRun)
{
    const auto m = build_candidate_matrix(matrix_from("aaab", 10), 1);
    ASSERT_EQ(m.words.size(), 2u);
    EXPECT_EQ(m.words[0], (CandidateWord{"a", 0, 10}));
    EXPECT_EQ(m.words[1], (CandidateWord{"b", 3, 10}));
}

TEST(CandidateMatrix, ForcedRetentionAfterSEliminations)
{
    // Starts 1..10 are eliminated (ten in a row), so 11 is forced; likewise 12..21 then 22.
    const auto m = build_candidate_matrix(matrix_from(std::string(25, 'a'), 10), 1);
    EXPECT_EQ(starts_of(m), (std::vector<Index>{0, 11, 22}));
}

TEST(CandidateMatrix, StrideWords)
{
    const auto symbols = matrix_from("abcdefghijklmnopqrstuvwxyz", 10);
    EXPECT_EQ(word_at(symbols, 0, 2), "ak");
    EXPECT_EQ(word_at(symbols, 3, 2), "dn");
    const auto m = build_candidate_matrix(symbols, 2);
    ASSERT_FALSE(m.words.empty());
    EXPECT_EQ(m.words.front().text, "ak");
    EXPECT_EQ(m.words.front().span, 20);
    EXPECT_EQ(m.generation, 2);
}

TEST(CandidateMatrix, GenerationTooLong)
{
    const auto symbols = matrix_from("abcabc", 3);  // series length 8
    EXPECT_NO_THROW(build_candidate_matrix(symbols, 2));
    try {
        build_candidate_matrix(symbols, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::GenerationTooLong);
    }
    EXPECT_THROW(build_candidate_matrix(symbols, 0), Error);
}

TEST(CandidateMatrix, PropertiesOnRandomStreams)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const Index s = 1 + static_cast<Index>(trial % 7);
        const auto stream = random_stream(rng, 40 + static_cast<std::size_t>(trial), 3, 0.7);
        const auto symbols = matrix_from(stream, s);
        const Index max_g = symbols.series_length / s;
        for (Index g = 1; g <= std::min<Index>(max_g, 4); ++g) {
            const auto m = build_candidate_matrix(symbols, g);
            ASSERT_FALSE(m.words.empty());
            Index previous = -1;
            for (const auto& w : m.words) {
                // Stride reconstruction and bounds.
                ASSERT_EQ(w.text, word_at(symbols, w.start, g));
                ASSERT_LE(w.start + g * s, symbols.series_length);
                // No more than s consecutive eliminated starts.
                ASSERT_LE(w.start - previous - 1, s);
                previous = w.start;
            }
            ASSERT_LE(symbols.series_length - g * s - previous, s);

            // Idempotent.
            EXPECT_EQ(eliminate_trivial_matches(m.words, s), m.words);

            // Dual route: the counter-based reference elimination agrees.
            const auto retained = oracle::reference_retained(symbols.symbols, s, symbols.series_length, g);
            std::vector<Index> reference;
            for (Index i = 0; i < static_cast<Index>(retained.size()); ++i) {
                if (retained[static_cast<std::size_t>(i)]) reference.push_back(i);
            }
            EXPECT_EQ(starts_of(m), reference);
        }
    }
}

TEST(CandidateMatrix, IdentityWithoutAdjacentDuplicates)
{
    std::mt19937_64 rng(5);
    const auto stream = random_stream(rng, 200, 5, 0.0);
    std::string distinct;
    for (const char c : stream) {
        if (distinct.empty() || distinct.back() != c) distinct.push_back(c);
    }
    const auto symbols = matrix_from(distinct, 4);
    const auto m = build_candidate_matrix(symbols, 1);
    EXPECT_EQ(static_cast<Index>(m.words.size()), symbols.size());
}
