#include <gtest/gtest.h>

#include <stdexcept>

#include "mcsdag/oracle.hpp"
#include "test_support.hpp"

using namespace mcsdag;
using oracle::brute_force_mcs;
using Strings = std::vector<std::string>;

TEST(Subsequence, Basics) {
    EXPECT_TRUE(oracle::is_subsequence("TCA", "TACA"));
    EXPECT_TRUE(oracle::is_subsequence("", "anything"));
    EXPECT_TRUE(oracle::is_subsequence("", ""));
    EXPECT_FALSE(oracle::is_subsequence("AA", "A"));
    EXPECT_TRUE(oracle::is_common_subsequence("TA", "TCACAG", "GTACTA"));
    EXPECT_FALSE(oracle::is_common_subsequence("GA", "TCACAG", "GTACTA"));
}

TEST(Maximality, IntroExample) {
    EXPECT_TRUE(oracle::is_maximal("TACA", fixtures::kIntroX, fixtures::kIntroY));
    EXPECT_TRUE(oracle::is_maximal("G", fixtures::kIntroX, fixtures::kIntroY));
    EXPECT_FALSE(oracle::is_maximal("TCA", fixtures::kIntroX, fixtures::kIntroY));
    EXPECT_FALSE(oracle::is_maximal("GG", fixtures::kIntroX, fixtures::kIntroY));
}

TEST(Maximality, EmptyString) {
    EXPECT_TRUE(oracle::is_maximal("", "AB", "CD"));
    EXPECT_FALSE(oracle::is_maximal("", "AB", "BC"));
}

TEST(Maximality, GapAnalysisAgreesWithInsertionClosure) {
    testing_support::for_each_pair("ABC", 4, [](const std::string& x, const std::string& y) {
        const oracle::MaximalityChecker checker(x, y);
        // every subsequence of x
        for (unsigned mask = 0; mask < (1u << x.size()); ++mask) {
            std::string s;
            for (std::size_t k = 0; k < x.size(); ++k) {
                if (mask >> k & 1u) s += x[k];
            }
            ASSERT_EQ(checker.is_maximal(s), oracle::is_maximal_by_insertion(s, x, y))
                << x << ' ' << y << ' ' << s;
        }
    });
}

TEST(BruteForce, Fixtures) {
    EXPECT_EQ(brute_force_mcs(fixtures::kFig1X, fixtures::kFig1Y).strings,
              (Strings{"ACAGG", "ACGAG", "CCAGG", "CCGAG", "TAGG"}));
    EXPECT_EQ(brute_force_mcs(fixtures::kExample1X, fixtures::kExample1Y).strings,
              (Strings{"TACA", "TACG"}));
    EXPECT_EQ(brute_force_mcs(fixtures::kIntroX, fixtures::kIntroY).strings,
              (Strings{"G", "TACA"}));
    EXPECT_EQ(brute_force_mcs("AB", "CD").strings, (Strings{""}));
    EXPECT_EQ(brute_force_mcs("", "CD").strings, (Strings{""}));
    EXPECT_EQ(brute_force_mcs("ABC", "ABC").strings, (Strings{"ABC"}));
}

TEST(BruteForce, EnforcesLengthCap) {
    const std::string long_x(oracle::kMaxBruteForceLength + 1, 'A');
    EXPECT_THROW(brute_force_mcs(long_x, "A"), std::length_error);
    EXPECT_NO_THROW(brute_force_mcs(std::string(oracle::kMaxBruteForceLength, 'A'), "A"));
}

TEST(BruteForce, TrieSpellsTheSet) {
    const auto set = brute_force_mcs(fixtures::kFig1X, fixtures::kFig1Y);
    EXPECT_EQ(set.trie.spell(), set.strings);
    EXPECT_EQ(set.trie.path_count(), set.strings.size());
    EXPECT_LT(set.trie.find("ACG"), set.trie.nodes().size());
    EXPECT_EQ(set.trie.find("ACT"), set.trie.nodes().size());
}

TEST(BruteForce, AntichainAndCoverage) {
    testing_support::for_each_pair("AB", 5, [](const std::string& x, const std::string& y) {
        const auto set = brute_force_mcs(x, y).strings;
        for (const auto& a : set) {
            EXPECT_TRUE(oracle::is_common_subsequence(a, x, y));
            for (const auto& b : set) {
                if (a != b) EXPECT_FALSE(oracle::is_subsequence(a, b)) << a << " in " << b;
            }
        }
        // every common subsequence lies inside some element
        for (unsigned mask = 0; mask < (1u << x.size()); ++mask) {
            std::string s;
            for (std::size_t k = 0; k < x.size(); ++k) {
                if (mask >> k & 1u) s += x[k];
            }
            if (!oracle::is_subsequence(s, y)) continue;
            bool covered = false;
            for (const auto& m : set) covered = covered || oracle::is_subsequence(s, m);
            EXPECT_TRUE(covered) << x << ' ' << y << ' ' << s;
        }
    });
}

TEST(DefinitionalSwings, Examples) {
    EXPECT_EQ(oracle::definitional_swings("TAC", fixtures::kSwingLeftX, fixtures::kSwingLeftY),
              (Quadruple{3, 3, 6, 8}));
    EXPECT_EQ(oracle::definitional_swings("T", fixtures::kExample1X, fixtures::kExample1Y),
              (Quadruple{0, 0, kInfinity, kInfinity}));
    EXPECT_EQ(oracle::definitional_swings("TCA", fixtures::kExample1X, fixtures::kExample1Y),
              (Quadruple{2, 4, 4, kInfinity}));
    EXPECT_EQ(oracle::definitional_swings("TC", fixtures::kExample1X, fixtures::kExample1Y),
              (Quadruple{1, 2, 3, kInfinity}));
}

TEST(DefinitionalSwings, RejectsNonCommonPrefix) {
    EXPECT_THROW(oracle::definitional_swings("GA", fixtures::kIntroX, fixtures::kIntroY),
                 std::invalid_argument);
}
