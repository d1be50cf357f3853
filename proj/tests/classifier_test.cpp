#include "wordsets/classifier.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

namespace wordsets {
namespace {

TEST(MatchFraction, Examples) {
    EXPECT_EQ(match_fraction({"dirac", "fock"}, {"dirac", "equation"}), Rational(1, 2));
    EXPECT_TRUE(is_matched({"dirac", "fock"}, {"dirac", "equation"}));
    EXPECT_EQ(match_fraction({"network", "neural"}, {"crystal", "dirac"}), Rational(0));
    EXPECT_FALSE(is_matched({"network", "neural"}, {"crystal", "dirac"}));
    const KeywordSet test_doc = make_keyword_set(
        {"dielectric", "function", "heavy", "nonmetallic", "crystal", "studied", "relativistic",
         "article", "correction", "dirac", "equation", "component", "two", "obtained",
         "hamiltonian", "some", "matrix", "element", "evaluated", "corrected"});
    EXPECT_EQ(match_fraction({"dielectric", "function"}, test_doc), Rational(1));
    EXPECT_EQ(match_fraction({"a", "b", "c"}, {"a"}), Rational(1, 3));
    EXPECT_FALSE(is_matched({"a", "b", "c"}, {"a"}));
    EXPECT_THROW(match_fraction({}, {"a"}), Error);
}

TEST(ScoreBreakdown, WorkedExampleArithmetic) {
    const auto b = ScoreBreakdown::from_counts("CH", 25, 44, 2, 43, Rational(36, 100));
    EXPECT_EQ(b.positive_pct, Rational(8));
    EXPECT_EQ(b.negative_pct, Rational(4300, 44));
    EXPECT_EQ(b.total, Rational(8) + Rational(1075, 11) + Rational(9, 25));
    EXPECT_EQ(to_fixed(b.total, 4), "106.0873");
    EXPECT_EQ(to_fixed(b.total, 2), "106.09");
}

TEST(ScoreBreakdown, ZeroDenominatorsGiveZero) {
    const auto b = ScoreBreakdown::from_counts("X", 0, 5, 0, 5, Rational(0));
    EXPECT_EQ(b.positive_pct, Rational(0));
    EXPECT_EQ(b.total, Rational(100));
    const auto c = ScoreBreakdown::from_counts("Y", 5, 0, 5, 0, Rational(1));
    EXPECT_EQ(c.negative_pct, Rational(0));
    EXPECT_EQ(c.total, Rational(101));
}

// Two classes with mirrored sets: a owns {a1,a2} and {a3,a4}, b owns
// {b1,b2} and {b3,b4}. Each has prior 1/2.
ProbabilityTable mirrored_table() {
    const std::vector<ItemSet> sets{{{"a1", "a2"}, {2, 0}},
                                    {{"a3", "a4"}, {3, 1}},
                                    {{"b1", "b2"}, {0, 2}},
                                    {{"b3", "b4"}, {1, 3}}};
    return build_table(sets, {"a", "b"}, SmoothingMode::paper_table);
}

TEST(Classify, SymmetricInputTiesAndPicksFirstClass) {
    const auto table = mirrored_table();
    // One word from a1/a2 and one from b1/b2: each class has p=1 of pval=2,
    // n=1 of nval=2, so total = 50 + 50 + 1/2 for both.
    const auto r = classify(table, {"a1", "b1"});
    EXPECT_EQ(r.breakdowns[0].total, Rational(201, 2));
    EXPECT_EQ(r.breakdowns[1].total, Rational(201, 2));
    EXPECT_TRUE(r.tie());
    EXPECT_EQ(r.top_classes, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(r.winner_name(), "a");
    EXPECT_EQ(r.matched_sets, (std::vector<std::size_t>{0, 2}));
}

TEST(Classify, ClearWinner) {
    const auto r = classify(mirrored_table(), {"b1", "b3", "zzz"});
    EXPECT_EQ(r.winner_name(), "b");
    EXPECT_FALSE(r.tie());
    EXPECT_EQ(r.breakdowns[1].total, Rational(100) + Rational(100) + Rational(1, 2));
    EXPECT_EQ(r.breakdowns[0].total, Rational(0) + Rational(0) + Rational(1, 2));
}

TEST(Classify, SaturationWhenEverySetMatches) {
    const auto table = mirrored_table();
    const auto r = classify(table, {"a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"});
    for (std::size_t c = 0; c < 2; ++c) {
        EXPECT_EQ(r.breakdowns[c].p, r.breakdowns[c].pval);
        EXPECT_EQ(r.breakdowns[c].n, 0u);
        EXPECT_EQ(r.breakdowns[c].total, Rational(100) + table.class_stats[c].prior);
    }
}

TEST(Classify, EmptyKeywordsAreLowEvidence) {
    const auto r = classify(mirrored_table(), {});
    EXPECT_TRUE(r.low_evidence);
    for (const auto& b : r.breakdowns) {
        EXPECT_EQ(b.p, 0u);
        EXPECT_EQ(b.total, b.negative_pct + b.prior);
    }
}

TEST(Classify, SingleClassAlwaysWins) {
    const auto table = build_table({{{"x"}, {2}}}, {"only"}, SmoothingMode::paper_table);
    EXPECT_EQ(classify(table, {"y"}).winner_name(), "only");
    EXPECT_EQ(classify(table, {"x"}).winner_name(), "only");
}

TEST(Classify, ClassWithoutOwnedSets) {
    const auto table = build_table({{{"x"}, {2, 0, 0}}, {{"y"}, {0, 2, 0}}}, {"a", "b", "c"},
                                   SmoothingMode::paper_table);
    const auto b = score_class(table, {"x"}, 2);
    EXPECT_EQ(b.pval, 0u);
    EXPECT_EQ(b.positive_pct, Rational(0));
    EXPECT_EQ(b.nval, 2u);
}

TEST(Classify, BreakdownCsv) {
    std::ostringstream out;
    write_breakdown_csv(out, classify(mirrored_table(), {"b1", "b3"}));
    EXPECT_EQ(out.str(),
              "class,pval,nval,p,n,positive_pct,negative_pct,prior,total\n"
              "a,2,2,0,0,0.00,0.00,0.50,0.50\n"
              "b,2,2,2,2,100.00,100.00,0.50,200.50\n");
}

struct RandomCase {
    ProbabilityTable table;
    KeywordSet keywords;
};

RandomCase random_case(std::mt19937& rng, std::size_t max_sets, std::size_t max_classes,
                       SmoothingMode mode) {
    const std::size_t k = 1 + rng() % max_classes;
    std::vector<std::string> classes;
    for (std::size_t c = 0; c < k; ++c) classes.push_back("c" + std::to_string(c));
    std::vector<ItemSet> sets;
    for (std::size_t s = 0, n = 1 + rng() % max_sets; s < n; ++s) {
        std::vector<std::string> words;
        for (std::size_t w = 0, m = 1 + rng() % 4; w < m; ++w)
            words.push_back("w" + std::to_string(rng() % 8));
        std::vector<std::size_t> counts(k);
        for (auto& v : counts) v = rng() % 4;
        counts[rng() % k] += 1;
        sets.push_back({make_keyword_set(words), counts});
    }
    std::vector<std::string> kw;
    for (std::size_t w = 0; w < 8; ++w)
        if (rng() % 3 == 0) kw.push_back("w" + std::to_string(w));
    return {build_table(sets, classes, mode), make_keyword_set(kw)};
}

TEST(ScoreClass, MatchesStraightLineOracle) {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto mode = trial % 3 == 0 ? SmoothingMode::per_class : SmoothingMode::paper_table;
        const auto rc = random_case(rng, 5, 3, mode);
        std::vector<oracle::Items> sets;
        std::vector<std::vector<double>> probs;
        for (const auto& e : rc.table.entries) {
            sets.push_back(e.itemset.items);
            std::vector<double> row;
            for (const auto& p : e.probs) row.push_back(to_double(p));
            probs.push_back(row);
        }
        for (std::size_t c = 0; c < rc.table.classes.size(); ++c) {
            const auto prior = to_double(rc.table.class_stats[c].prior);
            const auto want = oracle::plain_score(sets, probs, rc.keywords, static_cast<int>(c), prior);
            const auto got = score_class(rc.table, rc.keywords, c);
            ASSERT_EQ(static_cast<int>(got.pval), want.pval);
            ASSERT_EQ(static_cast<int>(got.nval), want.nval);
            ASSERT_EQ(static_cast<int>(got.p), want.p);
            ASSERT_EQ(static_cast<int>(got.n), want.n);
            ASSERT_NEAR(to_double(got.total), want.total, 1e-9);
        }
    }
}

TEST(Classify, Invariants) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const auto rc = random_case(rng, 10, 4, SmoothingMode::paper_table);
        const auto r = classify(rc.table, rc.keywords);
        Rational max_prior = 0;
        for (const auto& st : rc.table.class_stats) max_prior = std::max(max_prior, st.prior);
        for (std::size_t c = 0; c < r.breakdowns.size(); ++c) {
            const auto& b = r.breakdowns[c];
            EXPECT_EQ(b.pval + b.nval, rc.table.entries.size());
            EXPECT_EQ(b.pval, classify(rc.table, {}).breakdowns[c].pval);
            EXPECT_LE(b.p, b.pval);
            EXPECT_LE(b.n, b.nval);
            EXPECT_GE(b.total, 0);
            EXPECT_LE(b.total, Rational(200) + max_prior);
            EXPECT_LE(b.total, r.breakdowns[r.winner].total);
        }

        // Adding a keyword never lowers p and never raises n.
        auto more = rc.keywords;
        more.push_back("w" + std::to_string(rng() % 8));
        more = make_keyword_set(more);
        const auto r2 = classify(rc.table, more);
        for (std::size_t c = 0; c < r.breakdowns.size(); ++c) {
            EXPECT_GE(r2.breakdowns[c].p, r.breakdowns[c].p);
            EXPECT_LE(r2.breakdowns[c].n, r.breakdowns[c].n);
        }

        // Scaling every count by k keeps owners, hence the whole breakdown.
        const std::size_t k = 2 + rng() % 5;
        std::vector<ItemSet> scaled;
        for (const auto& e : rc.table.entries) {
            auto s = e.itemset;
            for (auto& v : s.class_counts) v *= k;
            scaled.push_back(s);
        }
        const auto scaled_table = build_table(scaled, rc.table.classes, SmoothingMode::paper_table);
        const auto r3 = classify(scaled_table, rc.keywords);
        EXPECT_EQ(r3.breakdowns, r.breakdowns);
        EXPECT_EQ(r3.winner, r.winner);
    }
}

}  // namespace
}  // namespace wordsets
